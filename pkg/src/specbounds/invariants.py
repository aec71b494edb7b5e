"""Exact graph invariants at desk scale.

alpha, omega and chi come from branch and bound; eta, iota and mad from
exhaustive subset search.  Every optimum is returned with a witness that
can be rechecked against the raw edge data.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from . import kernels
from .exact import Surd, fraction_json, surd_json
from .graph import MAX_KERNEL_N, Graph, GraphError, iter_bits, to_mask

# default ceilings on n; SPECBOUNDS_MAX_N overrides all of them
LIMITS = {
    "alpha": 40,
    "chi": 30,
    "bipartite": 24,
    "mad": 24,
    "planar": 10,
}


class SizeLimitError(GraphError):
    pass


def size_limit(kind: str) -> int:
    override = os.environ.get("SPECBOUNDS_MAX_N")
    limit = int(override) if override else LIMITS[kind]
    return min(limit, MAX_KERNEL_N)


def check_size(g: Graph, kind: str) -> None:
    limit = size_limit(kind)
    if g.n > limit:
        raise SizeLimitError(f"{kind} solver limited to n <= {limit}, got n = {g.n}")


def _bits(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(int(mask)))


# --------------------------------------------------------------------------
# independence, clique, colouring


def _greedy_independent(g: Graph) -> int:
    remaining = (1 << g.n) - 1
    chosen = 0
    while remaining:
        v = min(iter_bits(remaining), key=lambda u: ((g.adj[u] & remaining).bit_count(), u))
        chosen |= 1 << v
        remaining &= ~(g.adj[v] | 1 << v)
    return chosen


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    if g.n == 0:
        raise GraphError("independence number needs n >= 1")
    check_size(g, "alpha")
    mask = int(kernels.max_independent_set(g.masks, g.n, _greedy_independent(g)))
    if g.edges_within(mask):
        raise AssertionError("solver returned a dependent set")
    return mask.bit_count(), _bits(mask)


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    return independence_number(g.complement())


def greedy_coloring(g: Graph) -> list[int]:
    """Largest-first greedy; ties broken by lower index."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    for v in order:
        used = {colors[w] for w in iter_bits(g.adj[v])}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def chromatic_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    if g.n == 0:
        raise GraphError("chromatic number needs n >= 1")
    check_size(g, "chi")
    greedy = greedy_coloring(g)
    upper = max(greedy) + 1
    lower = clique_number(g)[0] if g.m else 1
    coloring = greedy
    for k in range(lower, upper):
        colors = kernels.k_coloring(g.masks, g.n, k)
        if colors[0] >= 0:
            coloring = [int(c) for c in colors]
            break
    chi = max(coloring) + 1
    for v, w in g.edges():
        if coloring[v] == coloring[w]:
            raise AssertionError("solver returned an improper colouring")
    return chi, tuple(coloring)


def theta(g: Graph, alpha: int | None = None) -> Fraction:
    """min(n/2, alpha)."""
    if alpha is None:
        alpha = independence_number(g)[0]
    return min(Fraction(g.n, 2), Fraction(alpha))


# --------------------------------------------------------------------------
# induced bipartite subgraphs


@dataclass(frozen=True)
class BipartiteWitness:
    """Induced bipartite subgraph H = G[left | right] with its bipartition."""

    left: frozenset[int]
    right: frozenset[int]
    edges: int

    @property
    def vertices(self) -> frozenset[int]:
        return self.left | self.right

    @property
    def product(self) -> int:
        return len(self.left) * len(self.right)

    @property
    def ratio(self) -> Surd:
        """|E(H)| / sqrt(|V1||V2|)."""
        return Surd(self.edges, max(self.product, 1))

    @property
    def avg_degree(self) -> Fraction:
        return Fraction(2 * self.edges, len(self.vertices))

    def verify(self, g: Graph) -> None:
        lmask, rmask = to_mask(self.left), to_mask(self.right)
        if lmask & rmask:
            raise AssertionError("witness sides overlap")
        if g.edges_within(lmask) or g.edges_within(rmask):
            raise AssertionError("witness side is not independent")
        if g.edges_within(lmask | rmask) != self.edges:
            raise AssertionError("witness edge count does not match the graph")

    def to_json(self) -> dict:
        return {"left": sorted(self.left), "right": sorted(self.right), "edges": self.edges}


def _witness(g: Graph, left: int, right: int) -> BipartiteWitness:
    return BipartiteWitness(_bits(left), _bits(right), g.edges_within(int(left) | int(right)))


def enumerate_induced_bipartite(g: Graph) -> Iterator[BipartiteWitness]:
    """Every induced bipartite subgraph with at least one edge and no isolated vertex.

    Include-first lexicographic backtracking over vertices 0..n-1; each
    witness carries the bipartition minimising |V1||V2|.
    """
    check_size(g, "bipartite")
    adj = g.masks
    n = g.n

    def grow(d: int, mask: int, e: int):
        if d == n:
            if e and not kernels.has_isolated(adj, mask):
                left, right, _ = kernels.aligned_bipartition(adj, mask)
                yield BipartiteWitness(_bits(left), _bits(right), e)
            return
        grown = mask | 1 << d
        if kernels.component_classes(adj, grown, d)[2]:
            yield from grow(d + 1, grown, e + (g.adj[d] & mask).bit_count())
        yield from grow(d + 1, mask, e)

    yield from grow(0, 0, 0)


@dataclass(frozen=True)
class _SearchResult:
    eta: BipartiteWitness
    iota: BipartiteWitness
    candidates: int


def _bipartite_search(g: Graph) -> _SearchResult:
    # the limit is read from the environment, so check it outside the cache
    check_size(g, "bipartite")
    return _cached_bipartite_search(g)


@lru_cache(maxsize=512)
def _cached_bipartite_search(g: Graph) -> _SearchResult:
    if g.n < 2:
        raise GraphError("eta and iota need n >= 2")
    if g.m == 0:
        # ratio 0 with a single vertex on each side, by convention
        w = BipartiteWitness(frozenset({0}), frozenset({1}), 0)
        return _SearchResult(w, w, 0)
    eta_e, eta_p, eta_l, eta_r, iota_e, iota_s, iota_mask, count = kernels.bipartite_search(g.masks, g.n)
    eta_w = _witness(g, eta_l, eta_r)
    left, right, _ = kernels.aligned_bipartition(g.masks, iota_mask)
    iota_w = _witness(g, left, right)
    if eta_w.edges != eta_e or eta_w.product != eta_p or iota_w.edges != iota_e:
        raise AssertionError("bipartite search witnesses do not recount")
    return _SearchResult(eta_w, iota_w, int(count))


def eta(g: Graph) -> tuple[Surd, BipartiteWitness]:
    """max |E(H)|/sqrt(|V1||V2|) over induced bipartite H and all bipartitions of H."""
    res = _bipartite_search(g)
    return res.eta.ratio, res.eta


def iota(g: Graph) -> tuple[Fraction, BipartiteWitness]:
    """max average degree over induced bipartite subgraphs."""
    res = _bipartite_search(g)
    return res.iota.avg_degree, res.iota


def mad(g: Graph) -> tuple[Fraction, frozenset[int]]:
    """Maximum average degree over all nonempty (induced) subgraphs."""
    if g.n == 0:
        raise GraphError("mad needs n >= 1")
    check_size(g, "mad")
    e, s, mask = kernels.densest_subset(g.masks, g.n)
    return Fraction(2 * int(e), int(s)), _bits(mask)


# --------------------------------------------------------------------------
# report


@dataclass(frozen=True)
class InvariantReport:
    n: int
    m: int
    alpha: int
    independent_set: frozenset[int]
    omega: int
    clique: frozenset[int]
    chi: int
    coloring: tuple[int, ...]
    theta: Fraction
    eta: Surd
    eta_witness: BipartiteWitness
    iota: Fraction
    iota_witness: BipartiteWitness
    mad: Fraction
    mad_witness: frozenset[int]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "omega": self.omega,
            "chi": self.chi,
            "theta": fraction_json(self.theta),
            "eta": surd_json(self.eta) | {"witness": self.eta_witness.to_json()},
            "iota": fraction_json(self.iota) | {"witness": self.iota_witness.to_json()},
            "mad": fraction_json(self.mad) | {"witness": sorted(self.mad_witness)},
            "independent_set": sorted(self.independent_set),
            "clique": sorted(self.clique),
            "coloring": list(self.coloring),
        }


def invariant_report(g: Graph) -> InvariantReport:
    if g.n < 2:
        raise GraphError("invariant report needs n >= 2")
    alpha, indep = independence_number(g)
    omega, clique = clique_number(g)
    chi, coloring = chromatic_number(g)
    eta_val, eta_w = eta(g)
    iota_val, iota_w = iota(g)
    mad_val, mad_w = mad(g)
    return InvariantReport(
        n=g.n,
        m=g.m,
        alpha=alpha,
        independent_set=indep,
        omega=omega,
        clique=clique,
        chi=chi,
        coloring=coloring,
        theta=theta(g, alpha),
        eta=eta_val,
        eta_witness=eta_w,
        iota=iota_val,
        iota_witness=iota_w,
        mad=mad_val,
        mad_witness=mad_w,
    )
