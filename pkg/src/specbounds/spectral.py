"""Adjacency spectra, the bipartite test vector, and divisor matrices."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import kernels
from .graph import Graph, GraphError, induced_subgraph, to_mask
from .polyroots import charpoly, real_roots

MAX_SWEEPS = 100
DIVISOR_MAX_DIM = 8


class SpectralError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending
    residual: float
    sweeps: int

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues[0]

    @property
    def lambda_min(self) -> float:
        return self.eigenvalues[-1]

    def to_json(self) -> list[float]:
        return list(self.eigenvalues)


def symmetric_eigenvalues(a: np.ndarray) -> tuple[np.ndarray, float, int]:
    """Jacobi eigenvalues of a dense symmetric matrix, descending.

    Also returns max_i ||A v_i - w_i v_i||_inf over the computed pairs.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectralError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise SpectralError("matrix must be symmetric")
    tol = 1e-12 * (1.0 + np.linalg.norm(a))
    w, v, sweeps, off = kernels.jacobi_eigh(a, tol, MAX_SWEEPS)
    if off >= tol:
        raise SpectralError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off={off:.3e})")
    residual = float(np.max(np.abs(a @ v - v * w))) if len(w) else 0.0
    order = np.argsort(-w, kind="stable")
    return w[order], residual, int(sweeps)


def eigenvalues_sym(g: Graph) -> Spectrum:
    if g.n == 0:
        raise GraphError("spectrum of the empty graph is undefined")
    w, residual, sweeps = symmetric_eigenvalues(g.adjacency_matrix())
    if residual > 1e-9 * max(1.0, w[0]):
        raise SpectralError(f"eigenpair residual {residual:.3e} above tolerance")
    return Spectrum(tuple(float(x) for x in w), residual, sweeps)


def lambda_min(g: Graph) -> float:
    return eigenvalues_sym(g).lambda_min


@dataclass(frozen=True)
class WitnessVector:
    entries: tuple[float, ...]
    norm_sq: Fraction  # x.x, exact
    value: float  # x.Ax / x.x


def rayleigh_witness(g: Graph, left: Sequence[int], right: Sequence[int]) -> WitnessVector:
    """Rayleigh quotient of the +-1/sqrt(side) test vector on a bipartite induced subgraph.

    ``left``/``right`` must be nonempty, disjoint and induce a bipartite
    subgraph with every edge crossing.  The quotient must equal
    -e/sqrt(|left||right|) and sit above the smallest eigenvalue.
    """
    left, right = sorted(set(left)), sorted(set(right))
    if not left or not right:
        raise GraphError("both sides of the bipartition must be nonempty")
    lmask, rmask = to_mask(left), to_mask(right)
    if lmask & rmask:
        raise GraphError("sides overlap")
    if g.edges_within(lmask) or g.edges_within(rmask):
        raise GraphError("a side contains an edge; not a bipartition of an induced subgraph")
    a, b = len(left), len(right)
    x = np.zeros(g.n)
    x[left] = 1.0 / math.sqrt(a)
    x[right] = -1.0 / math.sqrt(b)
    # x.x = |left| / |left| + |right| / |right|
    norm_sq = Fraction(a, a) + Fraction(b, b)
    value = float(x @ g.adjacency_matrix() @ x) / float(norm_sq)

    e = g.edges_within(lmask | rmask)
    expected = -e / math.sqrt(a * b)
    if abs(value - expected) > 1e-12 * max(1.0, abs(expected)):
        raise SpectralError(f"quotient {value!r} differs from -e/sqrt(p) = {expected!r}")
    lam = lambda_min(g)
    if value < lam - 1e-9:
        raise SpectralError(f"quotient {value!r} below smallest eigenvalue {lam!r}")
    return WitnessVector(tuple(float(t) for t in x), norm_sq, value)


@dataclass(frozen=True)
class EquitablePartition:
    cells: tuple[tuple[int, ...], ...]
    divisor: tuple[tuple[int, ...], ...]


def divisor_matrix(g: Graph, cells: Sequence[Sequence[int]]) -> EquitablePartition:
    cells_t = tuple(tuple(sorted(c)) for c in cells)
    seen = 0
    for c in cells_t:
        if not c:
            raise GraphError("empty cell")
        mask = to_mask(c)
        if mask & seen:
            raise GraphError("cells overlap")
        seen |= mask
    if seen != (1 << g.n) - 1:
        raise GraphError("cells do not cover the vertex set")
    masks = [to_mask(c) for c in cells_t]
    rows = []
    for i, ci in enumerate(cells_t):
        row = []
        for j, mj in enumerate(masks):
            counts = {v: (g.adj[v] & mj).bit_count() for v in ci}
            if len(set(counts.values())) > 1:
                detail = ", ".join(f"{v}:{c}" for v, c in counts.items())
                raise GraphError(f"not equitable: cell {i} -> cell {j} neighbour counts {detail}")
            row.append(counts[ci[0]])
        rows.append(tuple(row))
    return EquitablePartition(cells_t, tuple(rows))


def divisor_spectrum(g: Graph, cells: Sequence[Sequence[int]]) -> tuple[EquitablePartition, list[float]]:
    """Divisor matrix of an equitable partition and its eigenvalues, ascending.

    Eigenvalues come from the exact characteristic polynomial; every one is
    checked to be an adjacency eigenvalue of ``g`` no smaller than lambda_min.
    """
    part = divisor_matrix(g, cells)
    k = len(part.cells)
    if k > DIVISOR_MAX_DIM:
        raise SpectralError(f"divisor matrices above {DIVISOR_MAX_DIM}x{DIVISOR_MAX_DIM} are not supported")
    roots = real_roots(charpoly(part.divisor))
    if len(roots) != k:
        raise SpectralError("divisor matrix has non-real eigenvalues")
    lam = lambda_min(g)
    if roots[0] < lam - 1e-9:
        raise SpectralError(f"divisor eigenvalue {roots[0]!r} below lambda_min {lam!r}")
    return part, roots


@dataclass(frozen=True)
class InterlaceReport:
    host_min: float
    sub_min: float
    ok: bool


def interlace_check(g: Graph, vertices: Sequence[int]) -> InterlaceReport:
    """lambda_min(G) <= lambda_min(G[S]) for nonempty S."""
    if not vertices:
        raise GraphError("vertex set must be nonempty")
    sub, _ = induced_subgraph(g, vertices)
    host_min, sub_min = lambda_min(g), lambda_min(sub)
    ok = host_min <= sub_min + 1e-9
    if not ok:
        raise SpectralError(f"interlacing violated: {host_min!r} > {sub_min!r}")
    return InterlaceReport(host_min, sub_min, ok)


def average_degree(g: Graph, mask: int | None = None) -> Fraction:
    if mask is None:
        mask = (1 << g.n) - 1
    size = mask.bit_count()
    if size == 0:
        raise GraphError("average degree of an empty vertex set")
    return Fraction(2 * g.edges_within(mask), size)

