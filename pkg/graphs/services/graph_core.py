"""
Core graph representation: adjacency sets backed by integer bitsets, BFS
distances, eccentricities, induced subgraphs and connectivity.

Vertices are dense ids 0..n-1. A vertex set is a frozenset of ids; internally
sets are also handled as int masks where bit v stands for vertex v.
"""
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from graphs.exceptions import GraphFormatError, InvalidGraphError, InvalidVertexError
from utils.logging_utils import get_logger

logger = get_logger(__name__)

INFINITE = math.inf

Distance = Union[int, float]
VertexSet = frozenset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1"""
    n: int
    adj: Tuple[frozenset, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidGraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise InvalidGraphError(f"expected {self.n} adjacency sets, got {len(self.adj)}")
        for v, neighbours in enumerate(self.adj):
            if v in neighbours:
                raise InvalidGraphError(f"self-loop at vertex {v}")
            for u in neighbours:
                if not 0 <= u < self.n:
                    raise InvalidVertexError(f"neighbour {u} of vertex {v} out of range 0..{self.n - 1}")
                if v not in self.adj[u]:
                    raise InvalidGraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """Build a graph from an edge iterable; repeated edges collapse"""
        if n < 1:
            raise InvalidGraphError(f"graph needs at least one vertex, got n={n}")
        neighbours = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge {u}-{v} out of range 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            neighbours[u].add(v)
            neighbours[v].add(u)
        return cls(n, tuple(frozenset(s) for s in neighbours))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> 'Graph':
        adj = tuple(from_mask(mask) for mask in masks)
        return cls(len(adj), adj)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Open neighbourhood of every vertex as a bitmask"""
        return tuple(to_mask(neighbours) for neighbours in self.adj)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(mask | (1 << v) for v, mask in enumerate(self.masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(len(neighbours) for neighbours in self.adj) // 2

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (min, max) pairs sorted lexicographically"""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EccentricityProfile:
    """Per-vertex eccentricities with radius and diameter"""
    ecc: Tuple[Distance, ...]
    radius: Distance
    diameter: Distance

    @property
    def self_centered(self) -> bool:
        return self.radius == self.diameter and self.radius != INFINITE

    @property
    def connected(self) -> bool:
        return self.diameter != INFINITE

    def center(self) -> Tuple[int, ...]:
        """Vertices whose eccentricity equals the radius"""
        return tuple(v for v, e in enumerate(self.ecc) if e == self.radius)


def check_vertex(g: Graph, v: int) -> int:
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v} out of range 0..{g.n - 1}")
    return v


def as_vertex_set(g: Graph, s: Iterable[int], allow_empty: bool = False) -> VertexSet:
    """Validate members against g and freeze them"""
    members = frozenset(s)
    if not members and not allow_empty:
        raise InvalidVertexError("vertex set must not be empty")
    for v in members:
        check_vertex(g, v)
    return members


def _bfs_levels(masks: Sequence[int], source: int, within: int) -> Iterator[int]:
    """Yield BFS layers (as masks) from source inside the vertex mask within"""
    seen = 1 << source
    frontier = seen
    while frontier:
        yield frontier
        reach = 0
        # union of the neighbourhoods of the current layer
        for u in iter_bits(frontier):
            reach |= masks[u]
        # keep only unseen vertices inside the allowed region
        frontier = reach & within & ~seen
        seen |= frontier


def distances_from(g: Graph, v: int) -> Tuple[Distance, ...]:
    """Shortest-path distance from v to every vertex; INFINITE when unreachable"""
    check_vertex(g, v)
    distances: List[Distance] = [INFINITE] * g.n
    for level, layer in enumerate(_bfs_levels(g.masks, v, g.full_mask)):
        for u in iter_bits(layer):
            distances[u] = level
    return tuple(distances)


def _eccentricity(masks: Tuple[int, ...], v: int, within: int) -> Distance:
    seen = 0
    level = -1
    for level, layer in enumerate(_bfs_levels(masks, v, within)):
        seen |= layer
    return level if seen == within else INFINITE


def eccentricity_profile(g: Graph) -> EccentricityProfile:
    """Eccentricity of every vertex, radius, diameter"""
    ecc = tuple(_eccentricity(g.masks, v, g.full_mask) for v in range(g.n))
    if INFINITE in ecc:
        ecc = (INFINITE,) * g.n
    return EccentricityProfile(ecc=ecc, radius=min(ecc), diameter=max(ecc))


def eccentricities_within(g: Graph, s: Iterable[int]) -> Dict[int, Distance]:
    """
    Eccentricity of each member of s inside the induced subgraph <s>,
    computed on bitsets without building <s>. INFINITE for every member when
    <s> is disconnected.
    """
    members = as_vertex_set(g, s)
    within = to_mask(members)
    result = {v: _eccentricity(g.masks, v, within) for v in sorted(members)}
    if INFINITE in result.values():
        result = {v: INFINITE for v in result}
    return result


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    Subgraph induced by s.

    Returns:
        tuple: (induced graph, mapping old id -> new id in sorted order)
    """
    members = sorted(as_vertex_set(g, s))
    mapping = {old: new for new, old in enumerate(members)}
    adj = tuple(
        frozenset(mapping[u] for u in g.adj[old] if u in mapping)
        for old in members
    )
    return Graph(len(members), adj), mapping


def is_connected(g: Graph) -> bool:
    return reachable_mask(g.masks, 0, g.full_mask) == g.full_mask


def is_connected_set(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph induced by s is connected"""
    within = to_mask(as_vertex_set(g, s))
    start = (within & -within).bit_length() - 1
    return reachable_mask(g.masks, start, within) == within


def reachable_mask(masks: Sequence[int], source: int, within: int) -> int:
    """Mask of the vertices reachable from source without leaving within"""
    seen = 0
    for layer in _bfs_levels(masks, source, within):
        seen |= layer
    return seen


def format_distance(d: Distance) -> str:
    return 'INF' if d == INFINITE else str(d)


def serialize_graph(g: Graph, comment: Optional[str] = None) -> str:
    """Edge-list document for g, edges sorted by (min, max)"""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"graph {g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return '\n'.join(lines) + '\n'


class EdgeListParser:
    """Parser for the line-oriented edge-list format"""

    HEADER_KEYWORD = 'graph'
    COMMENT_PREFIX = '#'

    def parse(self, text: str) -> Graph:
        """Parse an edge-list document into a Graph"""
        lines = self._content_lines(text)
        if not lines:
            raise GraphFormatError("missing header line 'graph <n> <m>'")

        header_number, header = lines[0]
        n, m = self._validate_header(header, header_number)

        edge_lines = lines[1:]
        if len(edge_lines) != m:
            raise GraphFormatError(
                f"header declares {m} edges but {len(edge_lines)} edge lines follow"
            )

        seen = set()
        neighbours = [set() for _ in range(n)]
        for line_number, line in edge_lines:
            u, v = self._validate_edge(line, line_number, n)
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise GraphFormatError(f"Line {line_number}: duplicate edge {pair[0]} {pair[1]}")
            seen.add(pair)
            neighbours[u].add(v)
            neighbours[v].add(u)

        return Graph(n, tuple(frozenset(s) for s in neighbours))

    def _content_lines(self, text: str) -> List[Tuple[int, str]]:
        """Non-blank, non-comment lines with their 1-based line numbers"""
        result = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith(self.COMMENT_PREFIX):
                continue
            result.append((number, line))
        return result

    def _validate_header(self, line: str, line_number: int) -> Tuple[int, int]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != self.HEADER_KEYWORD:
            raise GraphFormatError(f"Line {line_number}: malformed header '{line}', expected 'graph <n> <m>'")
        n = self._validate_int(parts[1], 'vertex count', line_number)
        m = self._validate_int(parts[2], 'edge count', line_number)
        if n < 1:
            raise GraphFormatError(f"Line {line_number}: vertex count must be at least 1, got {n}")
        if m > n * (n - 1) // 2:
            raise GraphFormatError(f"Line {line_number}: {m} edges cannot fit a simple graph on {n} vertices")
        return n, m

    def _validate_edge(self, line: str, line_number: int, n: int) -> Tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"Line {line_number}: malformed edge '{line}', expected '<u> <v>'")
        u = self._validate_int(parts[0], 'vertex id', line_number)
        v = self._validate_int(parts[1], 'vertex id', line_number)
        for vertex in (u, v):
            if vertex >= n:
                raise GraphFormatError(f"Line {line_number}: vertex id {vertex} out of range 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"Line {line_number}: self-loop at vertex {u}")
        return u, v

    def _validate_int(self, token: str, field_name: str, line_number: int) -> int:
        try:
            value = int(token)
        except ValueError:
            raise GraphFormatError(f"Line {line_number}: invalid {field_name} '{token}'")
        if value < 0:
            raise GraphFormatError(f"Line {line_number}: {field_name} must be non-negative, got {value}")
        return value


def parse_graph(text: str) -> Graph:
    return EdgeListParser().parse(text)


def read_graph_file(path: Union[str, Path]) -> Graph:
    """Read and parse an edge-list file"""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        error = GraphFormatError(f"not a UTF-8 text file (byte {e.start}: {e.reason})")
        logger.log_input_error(str(path), error)
        raise error from e
    try:
        g = parse_graph(text)
    except GraphFormatError as e:
        logger.log_input_error(str(path), e)
        raise
    logger.debug(f"Loaded {g} from {path}")
    return g
