"""
Comfortable teams: dominating, connected sets whose induced subgraph
strictly lowers every member's eccentricity.

A disconnected team gets INFINITE eccentricities, so it can never be less
dispersive; restricting the search to connected subsets therefore loses
nothing.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Tuple

from django.conf import settings

from graphs.exceptions import (
    ConstructionFailedError,
    DisconnectedGraphError,
    GraphAnalysisError,
    HypothesisError,
    InvalidTeamError,
    InvalidVertexError,
    SearchCapExceededError,
    TrivialGraphError,
)
from graphs.services.domination import dominated_mask, enumerate_connected_subsets, is_dominating
from graphs.services.graph_core import (
    Distance,
    EccentricityProfile,
    Graph,
    VertexSet,
    as_vertex_set,
    check_vertex,
    eccentricities_within,
    eccentricity_profile,
    induced_subgraph,
    is_connected_set,
    to_mask,
)
from graphs.services.products import ProductIndexing, lex_product, lift_set, strong_product
from utils.logging_utils import get_logger, log_exceptions, log_performance

logger = get_logger(__name__)


@dataclass(frozen=True)
class MemberEccentricity:
    vertex: int
    graph_ecc: Distance
    team_ecc: Distance

    @property
    def lowered(self) -> bool:
        return self.team_ecc < self.graph_ecc


@dataclass(frozen=True)
class DispersionCheck:
    """Outcome of the less-dispersive test; truthy when it holds"""
    less_dispersive: bool
    per_member: Tuple[MemberEccentricity, ...]

    def __bool__(self):
        return self.less_dispersive

    def blocking_members(self) -> Tuple[MemberEccentricity, ...]:
        return tuple(entry for entry in self.per_member if not entry.lowered)


@dataclass(frozen=True)
class TeamDiagnosis:
    dominating: bool
    connected: bool
    less_dispersive: bool
    per_member: Tuple[MemberEccentricity, ...]
    undominated: Tuple[int, ...] = ()

    @property
    def comfortable(self) -> bool:
        return self.dominating and self.connected and self.less_dispersive


@dataclass(frozen=True)
class ComfortVerdict:
    exists: bool
    size: Optional[int]
    team: Optional[VertexSet]
    searched_through: int


def _require_connected(g: Graph, profile: EccentricityProfile, operation: str) -> None:
    if not profile.connected:
        raise DisconnectedGraphError(f"{operation} needs a connected graph; {g} is disconnected")


def is_less_dispersive(g: Graph, s: Iterable[int],
                       profile: Optional[EccentricityProfile] = None) -> DispersionCheck:
    """
    Check that every member of s is strictly closer to the rest of the team
    inside <s> than it is to the rest of the network in g.

    Args:
        g: connected graph
        s: nonempty candidate team
        profile: eccentricity profile of g, when the caller already has it

    Returns:
        DispersionCheck: verdict plus (vertex, e_G, e_<s>) per member
    """
    members = as_vertex_set(g, s)
    profile = profile or eccentricity_profile(g)
    _require_connected(g, profile, 'less-dispersive check')
    within = eccentricities_within(g, members)
    per_member = tuple(
        MemberEccentricity(vertex=v, graph_ecc=profile.ecc[v], team_ecc=e)
        for v, e in within.items()
    )
    return DispersionCheck(
        less_dispersive=all(entry.lowered for entry in per_member),
        per_member=per_member,
    )


def is_comfortable_team(g: Graph, s: Iterable[int],
                        profile: Optional[EccentricityProfile] = None) -> TeamDiagnosis:
    """Evaluate domination, connectivity and dispersion independently"""
    members = as_vertex_set(g, s)
    dispersion = is_less_dispersive(g, members, profile)
    covered = dominated_mask(g, to_mask(members))
    undominated = tuple(v for v in range(g.n) if not covered >> v & 1)
    return TeamDiagnosis(
        dominating=not undominated,
        connected=is_connected_set(g, members),
        less_dispersive=dispersion.less_dispersive,
        per_member=dispersion.per_member,
        undominated=undominated,
    )


class ComfortableTeamSolver:
    """Exact minimum comfortable team search with certified non-existence"""

    def __init__(self, search_cap: Optional[int] = None, brute_force_cap: Optional[int] = None):
        self.search_cap = search_cap if search_cap is not None else settings.GRAPH_SEARCH_CAP
        self.brute_force_cap = brute_force_cap if brute_force_cap is not None else settings.BRUTE_FORCE_CAP

    @log_exceptions('teams.services.comfort', expected=(GraphAnalysisError,))
    @log_performance('teams.services.comfort', threshold=2.0)
    def min_comfortable_team(self, g: Graph) -> ComfortVerdict:
        """
        Minimum comfortable team by size-ordered search over connected subsets.

        Returns:
            ComfortVerdict: the lexicographically first team of minimum size,
            or exists=False once every connected subset of every size failed
        """
        if g.n == 1:
            raise TrivialGraphError("the single-vertex graph has no eccentricity to lower")
        profile = eccentricity_profile(g)
        _require_connected(g, profile, 'comfortable team search')
        if g.n > self.search_cap:
            raise SearchCapExceededError(g.n, self.search_cap, 'comfortable team search')

        full = g.full_mask
        graph_ecc = profile.ecc
        for k in range(1, g.n + 1):
            for candidate in enumerate_connected_subsets(g, k):
                if dominated_mask(g, to_mask(candidate)) != full:
                    continue
                within = eccentricities_within(g, candidate)
                if all(e < graph_ecc[v] for v, e in within.items()):
                    logger.log_search_result('comfortable team', g.n, k)
                    return ComfortVerdict(exists=True, size=k, team=candidate, searched_through=k - 1)

        logger.log_search_result('comfortable team', g.n, None)
        return ComfortVerdict(exists=False, size=None, team=None, searched_through=g.n)

    @log_exceptions('teams.services.comfort', expected=(GraphAnalysisError,))
    def brute_force_gamma_comf(self, g: Graph) -> ComfortVerdict:
        """
        Independent oracle: every nonempty subset by increasing size, each
        judged on its materialised induced subgraph.
        """
        if g.n == 1:
            raise TrivialGraphError("the single-vertex graph has no eccentricity to lower")
        if g.n > self.brute_force_cap:
            raise SearchCapExceededError(g.n, self.brute_force_cap, 'brute-force comfortable team search')
        profile = eccentricity_profile(g)
        _require_connected(g, profile, 'brute-force comfortable team search')

        for k in range(1, g.n + 1):
            for candidate in combinations(range(g.n), k):
                if not is_dominating(g, candidate) or not is_connected_set(g, candidate):
                    continue
                team, mapping = induced_subgraph(g, candidate)
                team_ecc = eccentricity_profile(team).ecc
                if all(team_ecc[mapping[v]] < profile.ecc[v] for v in candidate):
                    return ComfortVerdict(exists=True, size=k, team=frozenset(candidate), searched_through=k - 1)
        return ComfortVerdict(exists=False, size=None, team=None, searched_through=g.n)


def _require_team(g: Graph, s: Iterable[int], name: str) -> VertexSet:
    members = as_vertex_set(g, s)
    diagnosis = is_comfortable_team(g, members)
    if not diagnosis.comfortable:
        raise InvalidTeamError(f"{name}={sorted(members)} is not a comfortable team of its factor")
    return members


def _assert_comfortable(product: Graph, team: VertexSet, construction: str) -> None:
    diagnosis = is_comfortable_team(product, team)
    if not diagnosis.comfortable:
        raise ConstructionFailedError(
            f"{construction} produced {sorted(team)}, which is not a comfortable team "
            f"(dominating={diagnosis.dominating}, connected={diagnosis.connected}, "
            f"less_dispersive={diagnosis.less_dispersive})",
            team=team,
            diagnosis=diagnosis,
        )


def strong_team_construction(g: Graph, h: Graph, s1: Iterable[int], s2: Iterable[int],
                             idx: Optional[ProductIndexing] = None,
                             product: Optional[Graph] = None) -> VertexSet:
    """
    Lift comfortable teams of both factors to S1 x S2 in G ⊠ H and confirm it
    is a comfortable team there.

    Raises:
        InvalidTeamError: s1 or s2 is not a comfortable team of its factor
        ConstructionFailedError: the lifted set fails the check
    """
    s1 = _require_team(g, s1, 's1')
    s2 = _require_team(h, s2, 's2')
    if product is None or idx is None:
        product, idx = strong_product(g, h)
    team = lift_set(idx, s1, s2)
    _assert_comfortable(product, team, 'strong product lift')
    return team


def lex_team_construction(g: Graph, h: Graph, s: Iterable[int], j: int,
                          idx: Optional[ProductIndexing] = None,
                          product: Optional[Graph] = None) -> VertexSet:
    """
    Copy a comfortable team of G into the fiber of H-vertex j inside G ∘ H.

    Needs r(G) >= 2; radius-1 factors are covered by lex_radius_fast_paths.
    """
    profile = eccentricity_profile(g)
    _require_connected(g, profile, 'lexicographic team construction')
    if profile.radius < 2:
        raise HypothesisError(f"lexicographic fiber construction needs r(G) >= 2, got r(G)={profile.radius}")
    check_vertex(h, j)
    s = _require_team(g, s, 's')
    if product is None or idx is None:
        product, idx = lex_product(g, h)
    team = frozenset(idx.flatten(i, j) for i in s)
    _assert_comfortable(product, team, f"lexicographic fiber {j}")
    return team


def lex_radius_fast_paths(g: Graph, h: Graph) -> Optional[ComfortVerdict]:
    """
    Closed-form γ_comf(G ∘ H) when G has a universal vertex.

    Returns:
        ComfortVerdict: size 1 when H also has a universal vertex (or is K1),
        size 2 otherwise; None when r(G) != 1
    """
    g_profile = eccentricity_profile(g)
    h_profile = eccentricity_profile(h)
    _require_connected(g, g_profile, 'lexicographic fast path')
    _require_connected(h, h_profile, 'lexicographic fast path')
    if g.n * h.n < 2:
        raise InvalidVertexError("lexicographic fast path needs a product with at least two vertices")
    if g_profile.radius != 1:
        return None

    product, idx = lex_product(g, h)
    centre = g_profile.center()[0]
    if h_profile.radius <= 1:
        team = frozenset({idx.flatten(centre, h_profile.center()[0])})
    else:
        partner = min(g.adj[centre])
        team = frozenset({idx.flatten(centre, 0), idx.flatten(partner, 0)})
    _assert_comfortable(product, team, 'lexicographic radius-1 fast path')
    return ComfortVerdict(exists=True, size=len(team), team=team, searched_through=len(team) - 1)

