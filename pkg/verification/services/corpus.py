"""
Graph corpora for the verification checks: every connected labeled graph up
to an order, or a seeded batch of random connected graphs.
"""
import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Tuple

from django.conf import settings

from graphs.exceptions import CorpusBoundsError
from graphs.services.generators import (
    MAX_ENUMERATION_ORDER,
    SeededStream,
    enumerate_connected_labeled,
    random_connected,
)
from graphs.services.graph_core import Graph


class CorpusMode(enum.Enum):
    EXHAUSTIVE = 'exhaustive'
    RANDOM = 'random'


@dataclass(frozen=True)
class CorpusSpec:
    mode: CorpusMode
    max_n: int = 0
    count: int = 0
    n_min: int = 1
    n_max: int = 1
    edge_prob: float = 0.5
    seed: int = 0
    connected_only: bool = True

    @classmethod
    def exhaustive(cls, max_n: int) -> 'CorpusSpec':
        return cls(mode=CorpusMode.EXHAUSTIVE, max_n=max_n)

    @classmethod
    def random(cls, count: int, n_min: int, n_max: int, edge_prob: float, seed: int) -> 'CorpusSpec':
        return cls(mode=CorpusMode.RANDOM, count=count, n_min=n_min, n_max=n_max,
                   edge_prob=edge_prob, seed=seed)

    @property
    def max_order(self) -> int:
        """Largest factor order the corpus can produce"""
        return self.max_n if self.mode is CorpusMode.EXHAUSTIVE else self.n_max

    def validate(self) -> None:
        if self.mode is CorpusMode.EXHAUSTIVE:
            limit = min(settings.EXHAUSTIVE_MAX_N, MAX_ENUMERATION_ORDER)
            if not 1 <= self.max_n <= limit:
                raise CorpusBoundsError(f"exhaustive corpus needs 1 <= max_n <= {limit}, got {self.max_n}")
            return
        if self.count < 0:
            raise CorpusBoundsError(f"random corpus count must be non-negative, got {self.count}")
        if not 1 <= self.n_min <= self.n_max:
            raise CorpusBoundsError(f"random corpus needs 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise CorpusBoundsError(f"edge probability must lie in [0, 1], got {self.edge_prob}")

    def describe(self) -> str:
        if self.mode is CorpusMode.EXHAUSTIVE:
            return f"exhaustive max_n={self.max_n}"
        return (f"random count={self.count} n={self.n_min}..{self.n_max} "
                f"p={self.edge_prob} seed={self.seed}")

    def _draw(self, stream: SeededStream) -> Graph:
        n = self.n_min + stream.randrange(self.n_max - self.n_min + 1)
        return random_connected(n, self.edge_prob, stream.raw())

    def graphs(self) -> Iterator[Graph]:
        """Corpus graphs in deterministic order"""
        self.validate()
        if self.mode is CorpusMode.EXHAUSTIVE:
            for n in range(1, self.max_n + 1):
                yield from enumerate_connected_labeled(n)
            return
        stream = SeededStream(self.seed)
        for _ in range(self.count):
            yield self._draw(stream)

    def pairs(self) -> Iterator[Tuple[Graph, Graph]]:
        """
        Ordered factor pairs: every (G, H) of the exhaustive corpus, or
        ``count`` independently drawn random pairs.
        """
        self.validate()
        if self.mode is CorpusMode.EXHAUSTIVE:
            graphs: List[Graph] = list(self.graphs())
            yield from product(graphs, graphs)
            return
        stream = SeededStream(self.seed)
        for _ in range(self.count):
            g = self._draw(stream)
            h = self._draw(stream)
            yield g, h
