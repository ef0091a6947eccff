"""
Strong and lexicographic graph products.

Product vertex (i, j), i in V(G) and j in V(H), is stored under the row-major
id i*m + j where m = |V(H)|.
"""
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from graphs.exceptions import InvalidVertexError
from graphs.services.graph_core import Graph, VertexSet, serialize_graph

PRODUCT_KINDS = ('strong', 'lex')

_PRODUCT_COMMENT = re.compile(r'^#\s*product\s+(strong|lex)\s+n=(\d+)\s+m=(\d+)\s*$')


@dataclass(frozen=True)
class ProductIndexing:
    """Row-major bijection between factor pairs and product ids"""
    n: int
    m: int

    @property
    def order(self) -> int:
        return self.n * self.m

    def flatten(self, i: int, j: int) -> int:
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise InvalidVertexError(f"pair ({i},{j}) out of range {self.n}x{self.m}")
        return i * self.m + j

    def unflatten(self, p: int) -> Tuple[int, int]:
        if not 0 <= p < self.order:
            raise InvalidVertexError(f"product vertex {p} out of range 0..{self.order - 1}")
        return divmod(p, self.m)

    def label(self, p: int) -> str:
        i, j = self.unflatten(p)
        return f"({i},{j})"


def strong_product(g: Graph, h: Graph) -> Tuple[Graph, ProductIndexing]:
    """G ⊠ H: coordinates pairwise equal-or-adjacent, not both equal"""
    idx = ProductIndexing(g.n, h.n)
    adj = []
    for i in range(g.n):
        rows = g.adj[i] | {i}
        for j in range(h.n):
            cols = h.adj[j] | {j}
            adj.append(frozenset(
                idx.flatten(k, l) for k in rows for l in cols if (k, l) != (i, j)
            ))
    return Graph(idx.order, tuple(adj)), idx


def lex_product(g: Graph, h: Graph) -> Tuple[Graph, ProductIndexing]:
    """G ∘ H: adjacent in G, or equal in G and adjacent in H"""
    idx = ProductIndexing(g.n, h.n)
    adj = []
    for i in range(g.n):
        across = [idx.flatten(k, l) for k in sorted(g.adj[i]) for l in range(h.n)]
        for j in range(h.n):
            within = (idx.flatten(i, l) for l in h.adj[j])
            adj.append(frozenset(across).union(within))
    return Graph(idx.order, tuple(adj)), idx


def build_product(kind: str, g: Graph, h: Graph) -> Tuple[Graph, ProductIndexing]:
    if kind == 'strong':
        return strong_product(g, h)
    if kind == 'lex':
        return lex_product(g, h)
    raise ValueError(f"Unknown product kind: {kind}. Must be one of {list(PRODUCT_KINDS)}")


def lift_set(idx: ProductIndexing, a: Iterable[int], b: Iterable[int]) -> VertexSet:
    """The Cartesian set a x b under the product indexing"""
    a, b = frozenset(a), frozenset(b)
    if not a or not b:
        raise InvalidVertexError("lift_set needs two nonempty factor sets")
    return frozenset(idx.flatten(i, j) for i in a for j in b)


def serialize_product(product: Graph, idx: ProductIndexing, kind: str) -> str:
    return serialize_graph(product, comment=f"product {kind} n={idx.n} m={idx.m}")


def read_product_indexing(text: str) -> Optional[ProductIndexing]:
    """Recover the indexing recorded in a product file's comment, if any"""
    for line in text.splitlines():
        match = _PRODUCT_COMMENT.match(line.strip())
        if match:
            return ProductIndexing(int(match.group(2)), int(match.group(3)))
    return None
