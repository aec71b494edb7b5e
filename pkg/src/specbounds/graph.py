"""Immutable simple graphs stored as per-vertex adjacency bitsets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np

# bitset kernels use int64 masks
MAX_KERNEL_N = 62


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is a Python int whose bit ``w`` is set iff v ~ w.  Equality
    and hashing are structural.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n >= 0")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @cached_property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, v: int, w: int) -> bool:
        return bool(self.adj[v] >> w & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges (v, w) with v < w in lexicographic order."""
        return [(v, w) for v in range(self.n) for w in iter_bits(self.adj[v] >> (v + 1) << (v + 1))]

    def edges_within(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for v, w in self.edges():
            a[v, w] = a[w, v] = 1.0
        return a

    @cached_property
    def masks(self) -> np.ndarray:
        """Adjacency bitsets as an int64 array, the form the kernels take."""
        if self.n > MAX_KERNEL_N:
            raise GraphError(f"bitset kernels support n <= {MAX_KERNEL_N}, got {self.n}")
        return np.array(self.adj, dtype=np.int64)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("n must be nonnegative")
    rows = [0] * n
    for v, w in edges:
        if not (0 <= v < n and 0 <= w < n):
            raise GraphError(f"edge ({v}, {w}) has an endpoint outside 0..{n - 1}")
        if v == w:
            raise GraphError(f"self-loop at vertex {v}")
        rows[v] |= 1 << w
        rows[w] |= 1 << v
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled 0..k-1 in increasing order.

    Returns the graph and the map new label -> host label.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(to_mask(index[w] for w in iter_bits(g.adj[v]) if w in index))
    return Graph(len(keep), tuple(rows)), keep


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]

    def __post_init__(self):
        if self.left & self.right:
            raise GraphError("bipartition sides overlap")


def is_bipartite(g: Graph) -> Bipartition | None:
    """BFS 2-colouring per component, component roots (and isolated vertices) on the left."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = [root]
        for v in queue:
            for w in iter_bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    left = frozenset(v for v in range(g.n) if colour[v] == 0)
    right = frozenset(v for v in range(g.n) if colour[v] == 1)
    return Bipartition(left, right)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Box product; vertex (v, w) gets label v * g2.n + w."""
    if g1.n == 0 or g2.n == 0:
        raise GraphError("cartesian product needs nonempty factors")
    n2 = g2.n
    edges = []
    for v in range(g1.n):
        for w1, w2 in g2.edges():
            edges.append((v * n2 + w1, v * n2 + w2))
    for v1, v2 in g1.edges():
        for w in range(n2):
            edges.append((v1 * n2 + w, v2 * n2 + w))
    return from_edges(g1.n * n2, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, g1.adj + tuple(row << shift for row in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = g1.n, g2.n
    lo = (1 << n1) - 1
    hi = ((1 << n2) - 1) << n1
    rows = tuple(row | hi for row in g1.adj) + tuple((row << n1) | lo for row in g2.adj)
    return Graph(n1 + n2, rows)
