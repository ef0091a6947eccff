from rest_framework import serializers

from utils.records import DistanceField, VertexSetField, set_argument


def _labels(context, members):
    indexing = context.get('indexing')
    if indexing is None or members is None:
        return None
    return [indexing.label(p) for p in sorted(members)]


class MemberEccentricitySerializer(serializers.Serializer):
    """Serializer for one (vertex, e_G, e_team) row"""
    vertex = serializers.IntegerField()
    graph_ecc = DistanceField()
    team_ecc = DistanceField()
    lowered = serializers.BooleanField()


class TeamDiagnosisSerializer(serializers.Serializer):
    """Serializer for a full comfortable-team diagnosis"""
    set = serializers.SerializerMethodField()
    dominating = serializers.BooleanField()
    connected = serializers.BooleanField()
    less_dispersive = serializers.BooleanField()
    comfortable = serializers.BooleanField()
    per_member = MemberEccentricitySerializer(many=True)
    undominated = serializers.ListField(child=serializers.IntegerField())
    labels = serializers.SerializerMethodField()

    def get_set(self, diagnosis):
        return set_argument(entry.vertex for entry in diagnosis.per_member)

    def get_labels(self, diagnosis):
        return _labels(self.context, [entry.vertex for entry in diagnosis.per_member])


class ComfortVerdictSerializer(serializers.Serializer):
    """Serializer for minimum comfortable team verdicts"""
    exists = serializers.BooleanField()
    size = serializers.IntegerField(allow_null=True)
    members = VertexSetField(source='team', allow_null=True)
    set = serializers.SerializerMethodField()
    searched_through = serializers.IntegerField()
    labels = serializers.SerializerMethodField()

    def get_set(self, verdict):
        return set_argument(verdict.team)

    def get_labels(self, verdict):
        return _labels(self.context, verdict.team)
