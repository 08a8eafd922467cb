from rest_framework import serializers


class NonPlanaritySerializer(serializers.Serializer):
    """Edge-count bound for triangle-free planar graphs"""
    certified = serializers.BooleanField()
    edge_count = serializers.IntegerField()
    bound = serializers.IntegerField()


class LiteralPathSerializer(serializers.Serializer):
    """Audit of the literal vertex sequence of the published Hamiltonicity argument"""
    edges_valid = serializers.BooleanField()
    covers_all = serializers.BooleanField()
    visited = serializers.IntegerField()
    total = serializers.IntegerField()
    sequence = serializers.ListField(child=serializers.CharField())


class ConstructiveColoringSerializer(serializers.Serializer):
    proper = serializers.BooleanField()
    color_count = serializers.IntegerField()


class MycielskiSubgraphSerializer(serializers.Serializer):
    verdict = serializers.ChoiceField(choices=['holds', 'fails', 'not_applicable'])
    extra_edges = serializers.IntegerField(allow_null=True)
    missing_edges = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))


class ChordAugmentationSerializer(serializers.Serializer):
    verdict = serializers.ChoiceField(choices=['verified', 'triangle_introduced', 'not_maximal', 'not_applicable'])
    witness = serializers.ListField(child=serializers.CharField(), allow_null=True)
    added_edges = serializers.ListField(child=serializers.ListField(child=serializers.CharField()))


class PropertyReportSerializer(serializers.Serializer):
    """
    Serializer for certification.reports.PropertyReport.

    Checks that were not selected serialize as null.
    """
    version = serializers.CharField()
    family = serializers.CharField()
    m = serializers.IntegerField()
    n = serializers.IntegerField()
    edge_count = serializers.IntegerField()
    degree_summary = serializers.DictField()
    checks = serializers.ListField(child=serializers.CharField())
    girth = serializers.JSONField(allow_null=True)
    chromatic_number = serializers.IntegerField(allow_null=True)
    chromatic_witness = serializers.DictField(child=serializers.IntegerField(), allow_null=True)
    lemma1_coloring = ConstructiveColoringSerializer(allow_null=True)
    triangle_free = serializers.BooleanField(allow_null=True)
    triangle_witness = serializers.ListField(child=serializers.CharField(), allow_null=True)
    maximal_triangle_free = serializers.BooleanField(allow_null=True)
    maximality_witness = serializers.ListField(child=serializers.CharField(), allow_null=True)
    hamiltonian = serializers.BooleanField(allow_null=True)
    hamiltonian_certificate = serializers.ListField(child=serializers.CharField(), allow_null=True)
    lemma2_literal_path = LiteralPathSerializer(allow_null=True)
    nonplanarity = NonPlanaritySerializer(allow_null=True)
    mycielski_subgraph = MycielskiSubgraphSerializer(allow_null=True)
    remark1 = ChordAugmentationSerializer(allow_null=True)
    claims = serializers.DictField(child=serializers.CharField())
    discrepancies = serializers.ListField(child=serializers.CharField())
    inconclusive = serializers.ListField(child=serializers.CharField())
    elapsed_ms = serializers.DictField(child=serializers.FloatField())
    exit_code = serializers.IntegerField(read_only=True)


class SurveyRowSerializer(serializers.Serializer):
    """One row of the survey table; cells are already CSV-ready"""
    m = serializers.IntegerField()
    family = serializers.CharField()
    n = serializers.IntegerField()
    edges = serializers.IntegerField()
    girth = serializers.CharField()
    chromatic = serializers.CharField()
    triangle_free = serializers.CharField()
    maximal_tf = serializers.CharField()
    hamiltonian = serializers.CharField()
    nonplanar_certified = serializers.CharField()
    mycielski_subgraph = serializers.CharField()
    remark1 = serializers.CharField()
    ms_elapsed = serializers.FloatField()
