"""
Errors raised while building graphs and graph families.
"""


class GraphError(ValueError):
    """Base class for invalid graph input"""


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Self-loop at vertex {vertex} is not allowed in a simple graph")


class IndexOutOfRangeError(GraphError):
    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(f"Vertex index {vertex} out of range for {vertex_count} vertices")


class LabelOrderError(GraphError):
    """Labels are duplicated, badly indexed or not in canonical order"""


class GraphFormatError(GraphError):
    """An adjacency-JSON document could not be parsed"""


class FamilyError(ValueError):
    """Base class for invalid family parameters"""


class BadParityError(FamilyError):
    def __init__(self, family: str, m: int):
        self.family = family
        self.m = m
        wanted = 'odd' if family == 'G' else 'even'
        super().__init__(f"Family {family} is defined for {wanted} m only, got m={m}")


class MTooSmallError(FamilyError):
    def __init__(self, family: str, m: int, minimum: int):
        self.family = family
        self.m = m
        self.minimum = minimum
        super().__init__(f"Family {family} requires m >= {minimum}, got m={m}")


class NotAnHGraphError(FamilyError):
    """The graph handed to the Remark-1 augmentation is not an unmodified H_m"""


class BadFamilyError(FamilyError):
    """The operation is not defined for the requested family"""
