from rest_framework import serializers

from teams.serializers import MemberEccentricitySerializer
from utils.records import VertexSetField


class CounterexampleSerializer(serializers.Serializer):
    """Self-contained certificate: both factor graphs in edge-list format"""
    check_id = serializers.CharField()
    subject = serializers.CharField()
    expected = serializers.CharField()
    actual = serializers.CharField()
    g = serializers.CharField(source='g_text')
    h = serializers.CharField(source='h_text')


class VerificationReportSerializer(serializers.Serializer):
    """Serializer for a corpus check summary"""
    check_id = serializers.CharField()
    description = serializers.CharField()
    corpus = serializers.CharField()
    instances_checked = serializers.IntegerField()
    skipped = serializers.IntegerField()
    certified_by_construction = serializers.IntegerField()
    counterexample_count = serializers.SerializerMethodField()
    passed = serializers.BooleanField()
    vacuous = serializers.BooleanField()

    def get_counterexample_count(self, report):
        return len(report.counterexamples)


class FailureModeEntrySerializer(serializers.Serializer):
    """Serializer for one graph without a comfortable team"""
    graph = serializers.CharField(source='graph_text')
    order = serializers.IntegerField()
    less_dispersive_not_dominating = serializers.BooleanField()
    largest_less_dispersive = VertexSetField(allow_null=True)
    undominated = serializers.ListField(child=serializers.IntegerField())
    dominating_not_less_dispersive = serializers.BooleanField()
    min_connected_dominating = VertexSetField()
    blocking_members = MemberEccentricitySerializer(many=True)


class ProductFindingSerializer(serializers.Serializer):
    """Serializer for an OPEN finding of the product exploration"""
    kind = serializers.CharField()
    g = serializers.CharField(source='g_text')
    h = serializers.CharField(source='h_text')
    factors_without_team = serializers.ListField(child=serializers.CharField())
    team_size = serializers.IntegerField()
    team = VertexSetField()


class FailureModeReportSerializer(serializers.Serializer):
    """Serializer for the failure-mode scan summary"""
    corpus = serializers.CharField()
    graphs_scanned = serializers.IntegerField()
    graphs_without_team = serializers.SerializerMethodField()
    products_scanned = serializers.IntegerField()
    open_findings = serializers.SerializerMethodField()

    def get_graphs_without_team(self, report):
        return len(report.entries)

    def get_open_findings(self, report):
        return len(report.findings)
