"""Generators for the graph families used throughout the package."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, disjoint_union, from_edges, join

# kind -> number of integer parameters
KINDS = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "multipartite": 2,
    "regbip": 2,
    "joinH": 1,
    "grid": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    """One member of a named family, e.g. ``FamilySpec("multipartite", (3, 2))``.

    Text form is ``kind:p1,p2``; ``multipartite:k,t`` has k parts of t
    vertices, ``regbip:d,t`` is d-regular bipartite on 2t vertices and
    ``joinH:s`` is the join of two copies of 2K_s.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")
        if len(self.params) != KINDS[self.kind]:
            raise GraphError(f"{self.kind} takes {KINDS[self.kind]} parameter(s)")
        if any(p < 1 for p in self.params):
            raise GraphError("family parameters must be positive")
        if self.kind == "cycle" and self.params[0] < 3:
            raise GraphError("cycle needs n >= 3")
        if self.kind == "multipartite" and self.params[0] < 2:
            raise GraphError("multipartite needs k >= 2 parts")
        if self.kind == "regbip" and self.params[0] > self.params[1]:
            raise GraphError("regbip needs 1 <= d <= t")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        kind, _, rest = text.partition(":")
        try:
            params = tuple(int(p) for p in rest.split(",")) if rest else ()
        except ValueError:
            raise GraphError(f"bad family parameters in {text!r}") from None
        return cls(kind.strip(), params)

    def __str__(self):
        return f"{self.kind}:{','.join(map(str, self.params))}"

    @property
    def planar(self) -> bool | None:
        """Planarity known from the construction, None when it depends on parameters we don't track."""
        if self.kind in ("cycle", "path", "grid"):
            return True
        if self.kind == "complete":
            return self.params[0] <= 4
        return None


def complete(n: int) -> Graph:
    return from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(k: int, t: int) -> Graph:
    """k parts of t vertices; part of vertex v is v // t."""
    n = k * t
    return from_edges(n, [(v, w) for v, w in combinations(range(n), 2) if v // t != w // t])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edges(a + b, [(v, a + w) for v in range(a) for w in range(b)])


def regular_bipartite(d: int, t: int) -> Graph:
    """Circulant d-regular bipartite graph: u_i = i ~ w_{(i+j) mod t} = t + (i+j) mod t, j < d."""
    if not 1 <= d <= t:
        raise GraphError("regular bipartite needs 1 <= d <= t")
    return from_edges(2 * t, [(i, t + (i + j) % t) for i in range(t) for j in range(d)])


def join_family(s: int) -> Graph:
    """H_s: join of two copies of 2K_s; cells are 0..s-1, s..2s-1, 2s..3s-1, 3s..4s-1."""
    two_ks = disjoint_union(complete(s), complete(s))
    return join(two_ks, two_ks)


def grid(a: int, b: int) -> Graph:
    """a x b grid; vertex (i, j) is i * b + j."""
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            if j + 1 < b:
                edges.append((v, v + 1))
            if i + 1 < a:
                edges.append((v, v + b))
    return from_edges(a * b, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    p = spec.params
    if spec.kind == "complete":
        return complete(p[0])
    if spec.kind == "cycle":
        return cycle(p[0])
    if spec.kind == "path":
        return path(p[0])
    if spec.kind == "multipartite":
        return complete_multipartite(*p)
    if spec.kind == "regbip":
        return regular_bipartite(*p)
    if spec.kind == "joinH":
        return join_family(p[0])
    return grid(*p)
