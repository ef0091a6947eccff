from rest_framework import serializers

from utils.records import DistanceField, VertexSetField, set_argument


class EccentricityProfileSerializer(serializers.Serializer):
    """Serializer for per-vertex eccentricities with radius and diameter"""
    ecc = serializers.ListField(child=DistanceField())
    radius = DistanceField()
    diameter = DistanceField()
    self_centered = serializers.BooleanField()
    center = serializers.SerializerMethodField()

    def get_center(self, profile):
        return list(profile.center())


class DominationWitnessSerializer(serializers.Serializer):
    """Serializer for minimum (connected) dominating sets"""
    size = serializers.IntegerField()
    members = VertexSetField(source='witness')
    set = serializers.SerializerMethodField()
    connected_required = serializers.BooleanField()
    labels = serializers.SerializerMethodField()

    def get_set(self, witness):
        return set_argument(witness.witness)

    def get_labels(self, witness):
        indexing = self.context.get('indexing')
        if indexing is None:
            return None
        return [indexing.label(p) for p in sorted(witness.witness)]


class GraphSummarySerializer(serializers.Serializer):
    """Serializer for a generated or loaded graph"""
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    edges = serializers.SerializerMethodField()

    def get_edges(self, graph):
        return [list(edge) for edge in graph.edges()]


class ProductSummarySerializer(serializers.Serializer):
    """Serializer for a written product graph"""
    kind = serializers.CharField()
    g_order = serializers.IntegerField()
    h_order = serializers.IntegerField()
    n = serializers.IntegerField()
    m = serializers.IntegerField()
    out = serializers.CharField(allow_null=True)
