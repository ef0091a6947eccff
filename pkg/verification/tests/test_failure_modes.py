import pytest

from graphs.exceptions import CorpusBoundsError
from graphs.services.domination import DominationSolver
from graphs.services.graph_core import parse_graph, serialize_graph
from graphs.services.products import build_product
from teams.services.comfort import MemberEccentricity, is_comfortable_team
from verification.services.corpus import CorpusSpec
from verification.services.failure_modes import (
    classify_graph,
    find_failure_modes,
    largest_less_dispersive_set,
    render_failure_modes,
)


@pytest.mark.unit
class TestClassifyGraph:
    """Test the two blocking mechanisms on the canonical cycles"""

    def test_five_cycle(self, c5):
        """Test C5: an edge is less dispersive, the minimum CDS is not"""
        entry = classify_graph(c5, DominationSolver())

        assert entry.less_dispersive_not_dominating
        assert entry.largest_less_dispersive == frozenset({0, 1})
        assert entry.undominated == (3,)
        assert entry.dominating_not_less_dispersive
        assert entry.min_connected_dominating == frozenset({0, 1, 2})
        assert entry.blocking_members == (MemberEccentricity(0, 2, 2), MemberEccentricity(2, 2, 2))

    def test_six_cycle(self, c6):
        """Test C6: an induced P3 is less dispersive, the induced P4 is not"""
        entry = classify_graph(c6, DominationSolver())

        assert entry.largest_less_dispersive == frozenset({0, 1, 2})
        assert entry.undominated == (4,)
        assert entry.min_connected_dominating == frozenset({0, 1, 2, 3})
        assert [b.vertex for b in entry.blocking_members] == [0, 3]

    def test_largest_less_dispersive_set_of_path(self, p6):
        """Test the interior of P6 is its largest less-dispersive set"""
        assert largest_less_dispersive_set(p6) == frozenset({1, 2, 3, 4})


@pytest.mark.unit
class TestFindFailureModes:
    """Test corpus scans for graphs without a team"""

    def test_radius_one_corpus_is_empty(self):
        """Test that small graphs all have teams"""
        report = find_failure_modes(CorpusSpec.exhaustive(3))

        assert report.graphs_scanned == 6
        assert report.entries == ()

    def test_five_vertex_corpus_lists_cycle(self, c5):
        """Test that C5 is among the team-less five-vertex graphs"""
        report = find_failure_modes(CorpusSpec.exhaustive(5))

        assert serialize_graph(c5) in [entry.graph_text for entry in report.entries]
        assert all(entry.order == 5 for entry in report.entries)
        assert all(entry.dominating_not_less_dispersive for entry in report.entries)
        assert 'graphs without a comfortable team' in render_failure_modes(report)

    def test_corpus_above_search_cap(self):
        """Test the factor size bound"""
        with pytest.raises(CorpusBoundsError):
            find_failure_modes(CorpusSpec.exhaustive(5), search_cap=4)

    def test_product_exploration(self):
        """Test that OPEN findings carry a verified product team"""
        report = find_failure_modes(CorpusSpec.exhaustive(5), explore_products=True, search_cap=10)

        assert report.products_scanned > 0
        for finding in report.findings:
            g, h = parse_graph(finding.g_text), parse_graph(finding.h_text)
            product, _ = build_product(finding.kind, g, h)
            assert finding.factors_without_team
            assert is_comfortable_team(product, finding.team).comfortable
