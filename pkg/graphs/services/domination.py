"""
Domination predicates and exact minimum (connected) dominating set search.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from django.conf import settings

from graphs.exceptions import DisconnectedGraphError, GraphAnalysisError, InvalidVertexError, SearchCapExceededError
from graphs.services.graph_core import (
    Graph,
    VertexSet,
    as_vertex_set,
    from_mask,
    is_connected,
    iter_bits,
    to_mask,
)
from utils.logging_utils import get_logger, log_exceptions, log_performance

logger = get_logger(__name__)


@dataclass(frozen=True)
class DominationWitness:
    size: int
    witness: VertexSet
    connected_required: bool


def dominated_mask(g: Graph, mask: int) -> int:
    """Union of the closed neighbourhoods of the vertices in mask"""
    covered = 0
    closed = g.closed_masks
    for v in iter_bits(mask):
        covered |= closed[v]
    return covered


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex is in s or adjacent to a member of s"""
    members = as_vertex_set(g, s, allow_empty=True)
    return dominated_mask(g, to_mask(members)) == g.full_mask


def enumerate_connected_subsets(g: Graph, k: int) -> Iterator[VertexSet]:
    """
    Every vertex subset of size k inducing a connected subgraph, once each,
    in lexicographic order of the sorted member lists.

    Subsets are grown from their smallest member through neighbours only;
    a vertex passed over at one level stays excluded below it, and a
    neighbour already adjacent to the subset is never re-offered, so no
    subset is produced twice.
    """
    if not 1 <= k <= g.n:
        raise InvalidVertexError(f"subset size {k} out of range 1..{g.n}")
    masks = g.masks
    for root in range(g.n):
        # only vertices above the root may join, so the root is the minimum
        allowed = g.full_mask & ~((1 << (root + 1)) - 1)
        found = list(_extend(masks, 1 << root, masks[root] | (1 << root), masks[root] & allowed,
                             allowed, 1, k))
        found.sort(key=lambda mask: sorted(iter_bits(mask)))
        for mask in found:
            yield from_mask(mask)


def _extend(masks, sub: int, closed: int, extension: int, allowed: int, size: int, k: int) -> Iterator[int]:
    if size == k:
        yield sub
        return
    while extension:
        # pop the lowest candidate; it is excluded from every later branch
        low = extension & -extension
        w = low.bit_length() - 1
        extension ^= low
        # offer only neighbours of w not yet adjacent to the subset
        grown = extension | (masks[w] & ~closed & allowed)
        yield from _extend(masks, sub | low, closed | masks[w] | low, grown, allowed, size + 1, k)


class DominationSolver:
    """Exact γ and γ_c by size-ordered exhaustive search"""

    def __init__(self, search_cap: Optional[int] = None):
        self.search_cap = search_cap if search_cap is not None else settings.GRAPH_SEARCH_CAP

    def _check_searchable(self, g: Graph, search: str) -> None:
        if not is_connected(g):
            raise DisconnectedGraphError(f"{search} needs a connected graph; {g} is disconnected")
        if g.n > self.search_cap:
            raise SearchCapExceededError(g.n, self.search_cap, search)

    @log_exceptions('graphs.services.domination', expected=(GraphAnalysisError,))
    @log_performance('graphs.services.domination', threshold=2.0)
    def min_dominating_set(self, g: Graph) -> DominationWitness:
        """
        Exact domination number.

        Returns:
            DominationWitness: lexicographically first minimum dominating set
        """
        self._check_searchable(g, 'minimum dominating set')
        full = g.full_mask
        closed = g.closed_masks
        for k in range(1, g.n + 1):
            for candidate in combinations(range(g.n), k):
                covered = 0
                for v in candidate:
                    covered |= closed[v]
                if covered == full:
                    logger.log_search_result('dominating set', g.n, k)
                    return DominationWitness(size=k, witness=frozenset(candidate), connected_required=False)
        raise AssertionError("the full vertex set always dominates")

    @log_exceptions('graphs.services.domination', expected=(GraphAnalysisError,))
    @log_performance('graphs.services.domination', threshold=2.0)
    def min_connected_dominating_set(self, g: Graph) -> DominationWitness:
        """
        Exact connected domination number.

        Returns:
            DominationWitness: lexicographically first minimum connected dominating set
        """
        self._check_searchable(g, 'minimum connected dominating set')
        full = g.full_mask
        for k in range(1, g.n + 1):
            for candidate in enumerate_connected_subsets(g, k):
                if dominated_mask(g, to_mask(candidate)) == full:
                    logger.log_search_result('connected dominating set', g.n, k)
                    return DominationWitness(size=k, witness=candidate, connected_required=True)
        raise AssertionError("a connected graph is its own connected dominating set")
