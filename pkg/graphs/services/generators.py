"""
Named graph families, seeded random connected graphs and exhaustive
enumeration of labeled connected graphs.

Random draws come from NumPy's PCG64 bit generator read through
``random_raw()``: floats are (x >> 11) * 2**-53 and bounded integers are
x mod k. Bit-generator streams are stable across NumPy releases and
platforms, so a (n, edge_prob, seed) triple always names the same graph.
"""
import enum
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from django.conf import settings
from numpy.random import PCG64

from graphs.exceptions import CorpusBoundsError, InvalidGraphError
from graphs.services.graph_core import Graph, is_connected, reachable_mask
from utils.logging_utils import get_logger

logger = get_logger(__name__)

MAX_ENUMERATION_ORDER = 7

_FLOAT_SCALE = 1.0 / (1 << 53)


class GraphFamily(enum.Enum):
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    STAR = 'star'


_MIN_ORDER = {
    GraphFamily.PATH: 1,
    GraphFamily.CYCLE: 3,
    GraphFamily.COMPLETE: 1,
    GraphFamily.STAR: 2,
}


@dataclass(frozen=True)
class FamilySpec:
    family: GraphFamily
    n: int

    def validate(self) -> None:
        minimum = _MIN_ORDER[self.family]
        if self.n < minimum:
            raise InvalidGraphError(
                f"{self.family.value} needs at least {minimum} vertices, got {self.n}"
            )


def gen_family(spec: FamilySpec) -> Graph:
    """Canonically numbered member of a named family (star centre is 0)"""
    spec.validate()
    n = spec.n
    if spec.family is GraphFamily.PATH:
        edges = [(v, v + 1) for v in range(n - 1)]
    elif spec.family is GraphFamily.CYCLE:
        edges = [(v, (v + 1) % n) for v in range(n)]
    elif spec.family is GraphFamily.COMPLETE:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    else:
        edges = [(0, v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


class SeededStream:
    """Uniform draws from a PCG64 stream"""

    def __init__(self, seed: int):
        self._bit_generator = PCG64(seed)

    def raw(self) -> int:
        return int(self._bit_generator.random_raw())

    def random(self) -> float:
        """Float in [0, 1)"""
        return (self.raw() >> 11) * _FLOAT_SCALE

    def randrange(self, k: int) -> int:
        """Integer in [0, k)"""
        return self.raw() % k

    def permutation(self, n: int) -> List[int]:
        """Fisher-Yates shuffle of 0..n-1"""
        items = list(range(n))
        for i in range(n - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def pair_index(u: int, v: int, n: int) -> int:
    """Edge-mask bit of the pair (u, v), u < v"""
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def vertex_pairs(n: int) -> List[Tuple[int, int]]:
    """All pairs u < v in edge-mask bit order"""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def random_connected(n: int, edge_prob: float, seed: int, retries: Optional[int] = None) -> Graph:
    """
    Seeded Erdős–Rényi draw conditioned on connectivity.

    Redraws up to ``retries`` times; if every draw is disconnected, a random
    spanning path is laid first and the remaining pairs are drawn with the
    same probability.
    """
    if n < 1:
        raise InvalidGraphError(f"random graph needs at least one vertex, got n={n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidGraphError(f"edge probability must lie in [0, 1], got {edge_prob}")
    retries = retries if retries is not None else settings.RANDOM_CONNECT_RETRIES

    stream = SeededStream(seed)
    pairs = vertex_pairs(n)
    for attempt in range(retries):
        g = Graph.from_edges(n, [pair for pair in pairs if stream.random() < edge_prob])
        if is_connected(g):
            logger.debug(f"random_connected(n={n}, p={edge_prob}, seed={seed}) connected on attempt {attempt + 1}")
            return g

    logger.debug(f"random_connected(n={n}, p={edge_prob}, seed={seed}) falling back to spanning patch")
    order = stream.permutation(n)
    path = {(min(a, b), max(a, b)) for a, b in zip(order, order[1:])}
    extra = [pair for pair in pairs if pair not in path and stream.random() < edge_prob]
    return Graph.from_edges(n, sorted(path) + extra)


def enumerate_connected_labeled(n: int) -> Iterator[Graph]:
    """All connected labeled graphs on n vertices, by ascending edge mask"""
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise CorpusBoundsError(f"exhaustive enumeration supports 1..{MAX_ENUMERATION_ORDER} vertices, got {n}")
    pairs = vertex_pairs(n)
    full = (1 << n) - 1
    for edge_mask in range(1 << len(pairs)):
        masks = [0] * n
        for u, v in pairs:
            if edge_mask >> pair_index(u, v, n) & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        if reachable_mask(masks, 0, full) == full:
            yield Graph.from_masks(masks)
