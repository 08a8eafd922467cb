"""
Errors raised by the verifiers and the brute-force oracles.
"""


class CertificationError(ValueError):
    """Base class for verifier errors"""


class InputHasTriangleError(CertificationError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"Input graph contains the triangle {tuple(witness.vertices)}")


class MissingVertexError(CertificationError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"Coloring assigns no color to vertex {vertex}")


class BudgetExceededError(CertificationError):
    """The search ran out of steps; the question stays open"""

    def __init__(self, search: str, steps: int):
        self.search = search
        self.steps = steps
        super().__init__(f"{search} exceeded its budget after {steps} steps")


class OverBudgetError(CertificationError):
    def __init__(self, oracle: str, vertex_count: int, limit: int):
        self.oracle = oracle
        self.vertex_count = vertex_count
        self.limit = limit
        super().__init__(f"Oracle {oracle} refuses {vertex_count} vertices (limit {limit})")
