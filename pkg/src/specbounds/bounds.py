"""Upper bounds on the smallest adjacency eigenvalue, carried exactly.

Values of the form -e/sqrt(p) are ``Surd``s, everything else is a
``Fraction``; floats appear only next to the computed eigenvalue.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import Surd, exact_cmp, fraction_json
from .graph import Graph, GraphError
from .invariants import (
    BipartiteWitness,
    chromatic_number,
    clique_number,
    eta,
    independence_number,
    iota,
    size_limit,
    theta,
)
from .planarity import is_planar_small
from .spectral import lambda_min

CHAIN_SLACK = 1e-8
STRICT_MARGIN = 1e-9


class BoundError(GraphError):
    pass


def bound_witness(w: BipartiteWitness) -> Surd:
    """-|E(H)|/sqrt(|V1||V2|) for one induced bipartite subgraph."""
    if not w.left or not w.right:
        raise BoundError("witness needs both sides nonempty")
    return Surd(-w.edges, w.product)


def bound_eta(g: Graph) -> Surd:
    return -eta(g)[0]


def bound_iota(g: Graph) -> Fraction:
    return -iota(g)[0]


def bound_explicit(g: Graph, chi: int | None = None, alpha: int | None = None) -> Fraction:
    """-m / (C(chi, 2) * theta)."""
    if g.m == 0:
        raise BoundError("explicit bound needs at least one edge")
    if chi is None:
        chi = chromatic_number(g)[0]
    return -Fraction(g.m) / (comb(chi, 2) * theta(g, alpha))


def bound_nikiforov(g: Graph, r: int, omega: int | None = None) -> Fraction:
    """-2^(r+1) m^r / (r n^(2r-1)) for K_{r+1}-free g."""
    if r < 2:
        raise BoundError("Nikiforov bound needs r >= 2")
    if g.m == 0:
        raise BoundError("Nikiforov bound needs at least one edge")
    if omega is None:
        omega = clique_number(g)[0]
    if omega > r:
        raise BoundError(f"graph contains K_{r + 1} (clique number {omega})")
    return -Fraction(2 ** (r + 1) * g.m**r, r * g.n ** (2 * r - 1))


def turan_edge_check(g: Graph, r: int, omega: int | None = None) -> bool:
    """m <= (1 - 1/r) n^2 / 2 for K_{r+1}-free g."""
    if omega is None:
        omega = clique_number(g)[0]
    if omega > r:
        raise BoundError(f"Turan check needs a K_{r + 1}-free graph (clique number {omega})")
    return 2 * r * g.m <= (r - 1) * g.n * g.n


def comparison_inequality(n: int, m: int, theta_value: Fraction, r: int) -> bool:
    """n^(2r-1) >= (r-1) theta 2^r m^(r-1), cleared of theta's denominator (1 or 2)."""
    twice_theta = 2 * Fraction(theta_value)
    if twice_theta.denominator != 1:
        raise BoundError("theta must be a multiple of 1/2")
    return 2 * n ** (2 * r - 1) >= (r - 1) * twice_theta.numerator * 2**r * m ** (r - 1)


@dataclass(frozen=True)
class ComparisonCase:
    case: str  # "chromatic" (chi in {2, 3}, r = chi) or "planar" (r = 4)
    r: int
    explicit: Fraction
    nikiforov: Fraction
    headline_ok: bool  # explicit <= nikiforov
    inequality_ok: bool

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "r": self.r,
            "explicit": fraction_json(self.explicit),
            "nikiforov": fraction_json(self.nikiforov),
            "headline_ok": self.headline_ok,
            "inequality_ok": self.inequality_ok,
        }


@dataclass(frozen=True)
class ComparisonReport:
    cases: tuple[ComparisonCase, ...]
    planar: bool | None  # None when undecided (too large, no provenance)

    @property
    def applicable(self) -> bool:
        return bool(self.cases)

    @property
    def ok(self) -> bool:
        return all(c.headline_ok and c.inequality_ok for c in self.cases)

    def to_json(self) -> dict:
        return {
            "applicable": self.applicable,
            "ok": self.ok,
            "planar": self.planar,
            "cases": [c.to_json() for c in self.cases],
        }


def comparison_check(
    g: Graph,
    planar: bool | None = None,
    chi: int | None = None,
    alpha: int | None = None,
) -> ComparisonReport:
    """Check the explicit bound against Nikiforov's where the comparison theorem applies.

    ``planar`` may be supplied from the construction (e.g. grids); otherwise
    it is decided by minor search when n is small enough.  Inapplicable
    graphs give a report with no cases.
    """
    if g.m == 0:
        raise BoundError("comparison needs at least one edge")
    if chi is None:
        chi = chromatic_number(g)[0]
    if alpha is None:
        alpha = independence_number(g)[0]
    th = theta(g, alpha)
    explicit = bound_explicit(g, chi, alpha)
    if planar is None and g.n <= size_limit("planar"):
        planar = is_planar_small(g)

    omega = clique_number(g)[0]
    cases = []
    wanted = []
    if chi in (2, 3):
        wanted.append(("chromatic", chi))
    if planar:
        wanted.append(("planar", 4))
    for name, r in wanted:
        nik = bound_nikiforov(g, r, omega)
        cases.append(
            ComparisonCase(
                case=name,
                r=r,
                explicit=explicit,
                nikiforov=nik,
                headline_ok=explicit <= nik,
                inequality_ok=comparison_inequality(g.n, g.m, th, r),
            )
        )
    return ComparisonReport(tuple(cases), planar)


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    lambda_min: float
    witness: BipartiteWitness
    eta_bound: Surd
    iota_bound: Fraction
    explicit_bound: Fraction | None
    nikiforov_r: int | None
    nikiforov: Fraction | None
    comparison: ComparisonReport | None

    @property
    def chain_ok(self) -> bool:
        """lambda <= -eta <= -iota <= explicit; first step with float slack, the rest exact."""
        ok = self.lambda_min <= float(self.eta_bound) + CHAIN_SLACK
        ok = ok and exact_cmp(self.eta_bound, self.iota_bound) <= 0
        if self.explicit_bound is not None:
            ok = ok and exact_cmp(self.iota_bound, self.explicit_bound) <= 0
        return ok

    @property
    def nikiforov_strict(self) -> bool | None:
        if self.nikiforov is None:
            return None
        return self.lambda_min < float(self.nikiforov) + STRICT_MARGIN

    @property
    def comparison_applicable(self) -> bool:
        return self.comparison is not None and self.comparison.applicable

    @property
    def comparison_ok(self) -> bool:
        return self.comparison is None or self.comparison.ok

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "lambda_min": self.lambda_min,
            "witness": self.witness.to_json(),
            "eta_bound": {"e": -self.eta_bound.num, "p": self.eta_bound.rad, "value": float(self.eta_bound)},
            "iota_bound": fraction_json(self.iota_bound),
            "explicit_bound": None if self.explicit_bound is None else fraction_json(self.explicit_bound),
            "nikiforov": None
            if self.nikiforov is None
            else {"r": self.nikiforov_r} | fraction_json(self.nikiforov),
            "chain_ok": self.chain_ok,
            "nikiforov_strict": self.nikiforov_strict,
            "comparison_applicable": self.comparison_applicable,
            "comparison_ok": self.comparison_ok,
        }
        if self.comparison is not None:
            out["comparison"] = self.comparison.to_json()
        return out


def bound_report(g: Graph, nikiforov_r: int | None = None, planar: bool | None = None) -> BoundReport:
    """Every bound for one graph (n >= 2).

    Nikiforov's bound uses ``nikiforov_r`` when given, else max(2, omega).
    """
    if g.n < 2:
        raise BoundError("bounds need at least two vertices")
    lam = lambda_min(g)
    eta_val, witness = eta(g)
    iota_val, _ = iota(g)
    explicit = nik = comparison = r = None
    if g.m:
        alpha = independence_number(g)[0]
        omega = clique_number(g)[0]
        chi = chromatic_number(g)[0]
        explicit = bound_explicit(g, chi, alpha)
        r = nikiforov_r if nikiforov_r is not None else max(2, omega)
        nik = bound_nikiforov(g, r, omega)
        comparison = comparison_check(g, planar, chi, alpha)
    return BoundReport(
        n=g.n,
        m=g.m,
        lambda_min=lam,
        witness=witness,
        eta_bound=-eta_val,
        iota_bound=-iota_val,
        explicit_bound=explicit,
        nikiforov_r=r,
        nikiforov=nik,
        comparison=comparison,
    )
