"""
Classification of graphs without a comfortable team.

Two mechanisms block a team: a less-dispersive connected set that does not
dominate, and a connected dominating set that is not less dispersive. For
each team-less graph both are made concrete with a witness.
"""
from dataclasses import dataclass
from itertools import product as pairs_of
from typing import Dict, List, Optional, Tuple

from django.conf import settings

from graphs.exceptions import CorpusBoundsError
from graphs.services.domination import DominationSolver, dominated_mask, enumerate_connected_subsets
from graphs.services.graph_core import Graph, VertexSet, eccentricity_profile, serialize_graph, to_mask
from graphs.services.products import PRODUCT_KINDS, build_product
from teams.services.comfort import ComfortableTeamSolver, MemberEccentricity, is_less_dispersive
from utils.logging_utils import LoggingContextManager, get_logger
from verification.services.corpus import CorpusSpec

logger = get_logger(__name__)


@dataclass(frozen=True)
class FailureModeEntry:
    graph_text: str
    order: int
    # a connected set is less dispersive but no such set dominates
    less_dispersive_not_dominating: bool
    largest_less_dispersive: Optional[VertexSet]
    undominated: Tuple[int, ...]
    # a connected dominating set exists but none is less dispersive
    dominating_not_less_dispersive: bool
    min_connected_dominating: VertexSet
    blocking_members: Tuple[MemberEccentricity, ...]


@dataclass(frozen=True)
class ProductFinding:
    """A product with a comfortable team although a factor has none"""
    kind: str
    g_text: str
    h_text: str
    factors_without_team: Tuple[str, ...]
    team_size: int
    team: VertexSet


@dataclass(frozen=True)
class FailureModeReport:
    corpus: str
    graphs_scanned: int
    entries: Tuple[FailureModeEntry, ...]
    products_scanned: int = 0
    findings: Tuple[ProductFinding, ...] = ()


def largest_less_dispersive_set(g: Graph) -> Optional[VertexSet]:
    """Lexicographically first less-dispersive connected set of maximum size"""
    profile = eccentricity_profile(g)
    for k in range(g.n, 0, -1):
        for candidate in enumerate_connected_subsets(g, k):
            if is_less_dispersive(g, candidate, profile):
                return candidate
    return None


def classify_graph(g: Graph, domination: DominationSolver) -> FailureModeEntry:
    """Witnesses for both blocking mechanisms of a graph without a team"""
    profile = eccentricity_profile(g)
    spread = largest_less_dispersive_set(g)
    undominated: Tuple[int, ...] = ()
    if spread is not None:
        covered = dominated_mask(g, to_mask(spread))
        undominated = tuple(v for v in range(g.n) if not covered >> v & 1)

    cds = domination.min_connected_dominating_set(g).witness
    blocking = is_less_dispersive(g, cds, profile).blocking_members()
    return FailureModeEntry(
        graph_text=serialize_graph(g),
        order=g.n,
        less_dispersive_not_dominating=spread is not None and bool(undominated),
        largest_less_dispersive=spread,
        undominated=undominated,
        dominating_not_less_dispersive=bool(blocking),
        min_connected_dominating=cds,
        blocking_members=blocking,
    )


class FailureModeScanner:
    """Finds the team-less graphs of a corpus and explains each one"""

    def __init__(self, search_cap: Optional[int] = None):
        self.search_cap = search_cap if search_cap is not None else settings.GRAPH_SEARCH_CAP
        self.comfort = ComfortableTeamSolver(search_cap=self.search_cap)
        self.domination = DominationSolver(search_cap=self.search_cap)
        self._has_team: Dict[Graph, bool] = {}

    def has_team(self, g: Graph) -> bool:
        if g not in self._has_team:
            self._has_team[g] = g.n > 1 and self.comfort.min_comfortable_team(g).exists
        return self._has_team[g]

    def scan(self, corpus: CorpusSpec, explore_products: bool = False) -> FailureModeReport:
        corpus.validate()
        if corpus.max_order > self.search_cap:
            raise CorpusBoundsError(
                f"failure-mode scan needs factors of at most {self.search_cap} vertices, "
                f"corpus allows {corpus.max_order}"
            )

        with LoggingContextManager(logger, 'failure-mode scan', corpus=corpus.describe()):
            graphs: List[Graph] = []
            seen = set()
            for g in corpus.graphs():
                if g not in seen:
                    seen.add(g)
                    graphs.append(g)

            entries = []
            for g in graphs:
                # K1 has no eccentricity to lower, so it is not a failure
                if g.n == 1 or self.has_team(g):
                    continue
                entries.append(classify_graph(g, self.domination))
            logger.info(f"{len(entries)} of {len(graphs)} graphs have no comfortable team")

            products_scanned, findings = 0, []
            if explore_products:
                products_scanned, findings = self._explore(graphs)

        return FailureModeReport(
            corpus=corpus.describe(),
            graphs_scanned=len(graphs),
            entries=tuple(entries),
            products_scanned=products_scanned,
            findings=tuple(findings),
        )

    def _explore(self, graphs: List[Graph]) -> Tuple[int, List[ProductFinding]]:
        scanned, findings = 0, []
        for g, h in pairs_of(graphs, graphs):
            if g.n == 1 or h.n == 1 or g.n * h.n > self.search_cap:
                continue
            lacking = tuple(name for name, factor in (('G', g), ('H', h)) if not self.has_team(factor))
            if not lacking:
                continue
            for kind in PRODUCT_KINDS:
                product, _ = build_product(kind, g, h)
                scanned += 1
                verdict = self.comfort.min_comfortable_team(product)
                if not verdict.exists:
                    continue
                logger.warning(
                    f"OPEN finding - {kind} product has a comfortable team of size {verdict.size} "
                    f"while {','.join(lacking)} has none: G={g} H={h}"
                )
                findings.append(ProductFinding(
                    kind=kind,
                    g_text=serialize_graph(g),
                    h_text=serialize_graph(h),
                    factors_without_team=lacking,
                    team_size=verdict.size,
                    team=verdict.team,
                ))
        return scanned, findings


def find_failure_modes(corpus: CorpusSpec, explore_products: bool = False,
                       search_cap: Optional[int] = None) -> FailureModeReport:
    return FailureModeScanner(search_cap=search_cap).scan(corpus, explore_products)


def render_failure_modes(report: FailureModeReport) -> str:
    lines = [
        f"corpus: {report.corpus}",
        f"graphs scanned: {report.graphs_scanned}",
        f"graphs without a comfortable team: {len(report.entries)}",
    ]
    for entry in report.entries:
        lines.append(f"  {' / '.join(entry.graph_text.splitlines())}")
        if entry.largest_less_dispersive is not None:
            lines.append(
                f"    less dispersive, not dominating: {_members(entry.largest_less_dispersive)} "
                f"misses {list(entry.undominated)}"
            )
        blocking = ', '.join(f"{b.vertex} ({b.team_ecc} vs {b.graph_ecc})" for b in entry.blocking_members)
        lines.append(
            f"    dominating, not less dispersive: {_members(entry.min_connected_dominating)} "
            f"blocked by {blocking}"
        )
    if report.products_scanned:
        lines.append(f"products explored: {report.products_scanned}")
        lines.append(f"OPEN findings: {len(report.findings)}")
        for finding in report.findings:
            lines.append(
                f"  {finding.kind}: team of size {finding.team_size} {_members(finding.team)}; "
                f"no team in {','.join(finding.factors_without_team)}"
            )
            lines.append(f"     G: {' / '.join(finding.g_text.splitlines())}")
            lines.append(f"     H: {' / '.join(finding.h_text.splitlines())}")
    return '\n'.join(lines) + '\n'


def _members(team) -> str:
    return '{' + ','.join(str(v) for v in sorted(team)) + '}'
