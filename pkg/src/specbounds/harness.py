"""Batch runner over graph6 corpora and the claim-by-claim verification suite."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import combinations_with_replacement
from typing import Any, Iterable, Sequence

from . import families
from .bounds import BoundReport, bound_explicit, bound_report, comparison_inequality, turan_edge_check
from .exact import Surd
from .graph import Graph, cartesian_product
from .graph6 import Graph6Error, parse_graph6
from .invariants import (
    SizeLimitError,
    chromatic_number,
    eta,
    independence_number,
    iota,
    theta,
)
from .spectral import divisor_spectrum, lambda_min

log = logging.getLogger(__name__)

SHARP_TOL = 1e-7

CSV_COLUMNS = [
    "graph6", "n", "m", "lambda", "eta", "iota", "explicit", "nik_r", "nik",
    "chain_ok", "eta_sharp", "iota_sharp", "explicit_sharp", "comparison_ok",
]  # fmt: skip
EXACT_COLUMNS = [
    "eta_e", "eta_p", "iota_num", "iota_den", "explicit_num", "explicit_den",
    "nik_num", "nik_den", "status",
]  # fmt: skip


class BatchParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def corpus_lines() -> list[str]:
    """Every graph on at most 7 vertices up to isomorphism, as graph6."""
    text = resources.files("specbounds").joinpath("data/graphs_upto7.g6").read_text("ascii")
    return [line for line in text.splitlines() if line]


def corpus_graphs(min_edges: int = 0) -> list[tuple[str, Graph]]:
    out = []
    for line in corpus_lines():
        g = parse_graph6(line)
        if g.n >= 2 and g.m >= min_edges:
            out.append((line, g))
    return out


def fmt(x: float | None) -> str:
    return "" if x is None else f"{x:.10g}"


# --------------------------------------------------------------------------
# batch rows


@dataclass(frozen=True)
class BatchRow:
    graph6: str
    n: int
    m: int
    status: str = "ok"  # ok | skipped: <reason>
    lambda_min: float | None = None
    eta: Surd | None = None
    iota: Fraction | None = None
    explicit: Fraction | None = None
    nik_r: int | None = None
    nik: Fraction | None = None
    chain_ok: bool | None = None
    eta_sharp: bool | None = None
    iota_sharp: bool | None = None
    explicit_sharp: bool | None = None
    comparison_ok: bool | None = None

    @property
    def computed(self) -> bool:
        return self.status == "ok"

    @property
    def eta_gap(self) -> float | None:
        """-eta - lambda, nonnegative up to rounding."""
        if self.eta is None or self.lambda_min is None:
            return None
        return -float(self.eta) - self.lambda_min

    def csv_record(self) -> list[str]:
        def b(x):
            return "" if x is None else str(x).lower()

        def num(q):
            return ("", "") if q is None else (str(q.numerator), str(q.denominator))

        return [
            self.graph6,
            str(self.n),
            str(self.m),
            fmt(self.lambda_min),
            fmt(None if self.eta is None else float(self.eta)),
            fmt(None if self.iota is None else float(self.iota)),
            fmt(None if self.explicit is None else float(self.explicit)),
            "" if self.nik_r is None else str(self.nik_r),
            fmt(None if self.nik is None else float(self.nik)),
            b(self.chain_ok),
            b(self.eta_sharp),
            b(self.iota_sharp),
            b(self.explicit_sharp),
            b(self.comparison_ok),
            "" if self.eta is None else str(self.eta.num),
            "" if self.eta is None else str(self.eta.rad),
            *num(self.iota),
            *num(self.explicit),
            *num(self.nik),
            self.status,
        ]

    def to_json(self) -> dict[str, Any]:
        def frac(q):
            return None if q is None else {"num": q.numerator, "den": q.denominator, "value": float(q)}

        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "lambda": self.lambda_min,
            "eta": None if self.eta is None else {"e": self.eta.num, "p": self.eta.rad, "value": float(self.eta)},
            "iota": frac(self.iota),
            "explicit": frac(self.explicit),
            "nik_r": self.nik_r,
            "nik": frac(self.nik),
            "chain_ok": self.chain_ok,
            "eta_sharp": self.eta_sharp,
            "iota_sharp": self.iota_sharp,
            "explicit_sharp": self.explicit_sharp,
            "comparison_ok": self.comparison_ok,
        }


def row_from_report(line: str, rep: BoundReport) -> BatchRow:
    lam = rep.lambda_min
    explicit = rep.explicit_bound
    return BatchRow(
        graph6=line,
        n=rep.n,
        m=rep.m,
        lambda_min=lam,
        eta=-rep.eta_bound,
        iota=-rep.iota_bound,
        explicit=explicit,
        nik_r=rep.nikiforov_r,
        nik=rep.nikiforov,
        chain_ok=rep.chain_ok,
        eta_sharp=abs(lam - float(rep.eta_bound)) <= SHARP_TOL,
        iota_sharp=abs(lam - float(rep.iota_bound)) <= SHARP_TOL,
        explicit_sharp=None if explicit is None else abs(lam - float(explicit)) <= SHARP_TOL,
        comparison_ok=rep.comparison_ok if rep.comparison_applicable else None,
    )


def compute_row(line: str, strict: bool = False) -> BatchRow:
    """One row from one graph6 line; raises Graph6Error on bad input."""
    g = parse_graph6(line)
    if g.n < 2:
        return BatchRow(line, g.n, g.m, status="skipped: n < 2")
    try:
        rep = bound_report(g)
    except SizeLimitError as exc:
        if strict:
            raise
        return BatchRow(line, g.n, g.m, status=f"skipped: {exc}")
    return row_from_report(line, rep)


def _compute_row_star(args):
    return compute_row(*args)


@dataclass
class BatchResult:
    rows: list[BatchRow]
    summary: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.summary.get("chain_failures", 0) > 0 or self.summary.get("comparison_failures", 0) > 0


def summarize(rows: Sequence[BatchRow]) -> dict[str, Any]:
    done = [r for r in rows if r.computed]
    gaps = [r.eta_gap for r in done if r.eta_gap is not None]
    return {
        "rows": len(rows),
        "computed": len(done),
        "skipped": len(rows) - len(done),
        "chain_failures": sum(1 for r in done if not r.chain_ok),
        "comparison_failures": sum(1 for r in done if r.comparison_ok is False),
        "eta_sharp": sum(1 for r in done if r.eta_sharp),
        "iota_sharp": sum(1 for r in done if r.iota_sharp),
        "explicit_sharp": sum(1 for r in done if r.explicit_sharp),
        "eta_gap_min": min(gaps) if gaps else None,
        "eta_gap_mean": math.fsum(gaps) / len(gaps) if gaps else None,
    }


def run_batch(lines: Iterable[tuple[int, str]], strict: bool = False, jobs: int = 1) -> BatchResult:
    """Bound rows for numbered graph6 lines, in input order.

    Lines are all parsed up front so a malformed line fails the run before
    any work starts.
    """
    numbered = list(lines)
    for lineno, text in numbered:
        try:
            parse_graph6(text)
        except Graph6Error as exc:
            raise BatchParseError(lineno, str(exc)) from None
    texts = [text for _, text in numbered]
    if jobs > 1 and len(texts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_compute_row_star, [(t, strict) for t in texts], chunksize=16))
    else:
        rows = [compute_row(t, strict) for t in texts]
    skipped = sum(1 for r in rows if not r.computed)
    if skipped:
        log.warning("%d of %d graphs skipped", skipped, len(rows))
    return BatchResult(rows, summarize(rows))


def batch_csv(result: BatchResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS + EXACT_COLUMNS)
    for row in result.rows:
        writer.writerow(row.csv_record())
    return buf.getvalue()


def batch_json(result: BatchResult) -> str:
    return json.dumps({"rows": [r.to_json() for r in result.rows], "summary": result.summary}, indent=1) + "\n"


# --------------------------------------------------------------------------
# claim suite


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    params: dict[str, Any]
    expected: Any
    computed: Any
    passed: bool
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ",".join(f"{k}={v}" for k, v in self.params.items())
        text = f"{status} {self.claim} [{params}] expected={self.expected} computed={self.computed}"
        return f"{text} ({self.note})" if self.note else text

    def to_json(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "params": self.params,
            "expected": self.expected,
            "computed": self.computed,
            "pass": self.passed,
            "note": self.note,
        }


def close(x: float, target: float, tol: float = SHARP_TOL) -> bool:
    return abs(x - target) <= tol


def claim_regular_bipartite(max_t: int = 5) -> list[ClaimResult]:
    out = []
    for t in range(1, max_t + 1):
        for d in range(1, t + 1):
            g = families.regular_bipartite(d, t)
            lam = lambda_min(g)
            explicit = bound_explicit(g)
            out.append(
                ClaimResult(
                    "regular-bipartite",
                    {"d": d, "t": t},
                    {"lambda": -d, "explicit": -d},
                    {"lambda": fmt(lam), "explicit": str(explicit)},
                    close(lam, -d) and explicit == -d,
                )
            )
    return out


def claim_multipartite(max_k: int = 5, max_t: int = 4) -> list[ClaimResult]:
    out = []
    for k in range(2, max_k + 1):
        for t in range(1, max_t + 1):
            g = families.complete_multipartite(k, t)
            lam = lambda_min(g)
            chi = chromatic_number(g)[0]
            alpha = independence_number(g)[0]
            explicit = bound_explicit(g, chi, alpha)
            m_expected = math.comb(k, 2) * t * t
            out.append(
                ClaimResult(
                    "multipartite",
                    {"k": k, "t": t},
                    {"lambda": -t, "explicit": -t, "chi": k, "alpha": t, "m": m_expected},
                    {"lambda": fmt(lam), "explicit": str(explicit), "chi": chi, "alpha": alpha, "m": g.m},
                    close(lam, -t) and explicit == -t and chi == k and alpha == t and g.m == m_expected,
                )
            )
    return out


def join_cells(s: int) -> list[range]:
    return [range(i * s, (i + 1) * s) for i in range(4)]


def claim_join_gap(max_s: int = 4) -> list[ClaimResult]:
    out = []
    for s in range(1, max_s + 1):
        g = families.join_family(s)
        eta_val = eta(g)[0]
        lam = lambda_min(g)
        _, roots = divisor_spectrum(g, join_cells(s))
        gap = -float(eta_val) - lam
        out.append(
            ClaimResult(
                "join-gap",
                {"s": s, "n": g.n},
                {"eta": 2, "lambda": -(s + 1), "divisor_min": -(s + 1), "gap": s - 1},
                {"eta": str(eta_val), "lambda": fmt(lam), "divisor_min": fmt(roots[0]), "gap": fmt(gap)},
                eta_val == 2 and close(lam, -(s + 1)) and close(roots[0], -(s + 1)) and close(gap, s - 1),
            )
        )
    return out


PRODUCT_FACTORS = {
    "K2": lambda: families.complete(2),
    "C4": lambda: families.cycle(4),
    "K2,3": lambda: families.complete_bipartite(2, 3),
    "C6": lambda: families.cycle(6),
}
PRODUCT_MAX_N = 20


def iota_sharp(g: Graph) -> tuple[bool, float, Fraction]:
    lam = lambda_min(g)
    val = iota(g)[0]
    return close(lam, -float(val)), lam, val


def claim_product_closure(factors: dict | None = None, max_n: int = PRODUCT_MAX_N) -> list[ClaimResult]:
    """Sharpness of -iota carries over to box products.

    A pair passes when its conclusion holds or when a factor fails the
    premise (the statement is then vacuous); the premise is reported either way.
    """
    factors = factors or PRODUCT_FACTORS
    graphs = {name: make() for name, make in factors.items()}
    premise = {name: iota_sharp(g)[0] for name, g in graphs.items()}
    out = []
    for a, b in combinations_with_replacement(graphs, 2):
        g1, g2 = graphs[a], graphs[b]
        if g1.n * g2.n > max_n:
            continue
        prod = cartesian_product(g1, g2)
        sharp, lam, val = iota_sharp(prod)
        holds = premise[a] and premise[b]
        out.append(
            ClaimResult(
                "product-closure",
                {"factors": f"{a}x{b}", "n": prod.n},
                {"lambda": f"-iota = {fmt(-float(val))}"},
                {"lambda": fmt(lam), "iota": str(val), "premise": holds},
                sharp or not holds,
                note="" if holds else "premise fails: a factor has lambda != -iota",
            )
        )
    return out


def _corpus_reports() -> list[tuple[str, Graph, BoundReport]]:
    return [(line, g, bound_report(g)) for line, g in corpus_graphs(min_edges=1)]


def claim_corpus(reports=None) -> list[ClaimResult]:
    """Bound chain, Nikiforov strictness and both comparison cases over the n <= 7 corpus."""
    reports = reports if reports is not None else _corpus_reports()
    chain_bad, strict_bad = [], []
    chrom_total = planar_total = 0
    chrom_bad, planar_bad = [], []
    for line, g, rep in reports:
        if not rep.chain_ok:
            chain_bad.append(line)
        if not rep.nikiforov_strict:
            strict_bad.append(line)
        for case in rep.comparison.cases if rep.comparison else ():
            good = case.headline_ok and case.inequality_ok
            if case.case == "chromatic":
                chrom_total += 1
                good = good and turan_edge_check(g, case.r)
                if not good:
                    chrom_bad.append(line)
            else:
                planar_total += 1
                if not good:
                    planar_bad.append(line)

    def result(claim, total, bad):
        return ClaimResult(
            claim,
            {"graphs": total},
            {"violations": 0},
            {"violations": len(bad)},
            not bad,
            note=" ".join(bad[:10]),
        )

    return [
        result("bound-chain", len(reports), chain_bad),
        result("nikiforov-strict", len(reports), strict_bad),
        result("nikiforov-chromatic", chrom_total, chrom_bad),
        result("nikiforov-planar", planar_total, planar_bad),
    ]


def claim_planar_grids(max_side: int = 4) -> list[ClaimResult]:
    """The edge-density inequality with r = 4 on grids, planar by construction."""
    out = []
    for a in range(2, max_side + 1):
        for b in range(a, max_side + 1):
            g = families.grid(a, b)
            th = theta(g)
            rep = bound_report(g, planar=True)
            case = next(c for c in rep.comparison.cases if c.case == "planar")
            ok = case.headline_ok and comparison_inequality(g.n, g.m, th, 4)
            out.append(
                ClaimResult(
                    "nikiforov-planar",
                    {"grid": f"{a}x{b}", "n": g.n, "m": g.m, "theta": str(th)},
                    {"explicit<=nik": True, "ineq": True},
                    {"explicit": str(case.explicit), "nik": str(case.nikiforov), "ineq": case.inequality_ok},
                    ok,
                )
            )
    return out


CLAIMS = (
    "regular-bipartite",
    "multipartite",
    "join-gap",
    "product-closure",
    "bound-chain",
    "nikiforov-strict",
    "nikiforov-chromatic",
    "nikiforov-planar",
)
CORPUS_CLAIMS = {"bound-chain", "nikiforov-strict", "nikiforov-chromatic", "nikiforov-planar"}


def verify_claims(claims: Sequence[str] | None = None, max_s: int = 4) -> list[ClaimResult]:
    wanted = list(claims) if claims else list(CLAIMS)
    unknown = set(wanted) - set(CLAIMS)
    if unknown:
        raise ValueError(f"unknown claim(s): {', '.join(sorted(unknown))}; choose from {', '.join(CLAIMS)}")
    results: list[ClaimResult] = []
    if "regular-bipartite" in wanted:
        results += claim_regular_bipartite()
    if "multipartite" in wanted:
        results += claim_multipartite()
    if "join-gap" in wanted:
        results += claim_join_gap(max_s)
    if "product-closure" in wanted:
        results += claim_product_closure()
    if CORPUS_CLAIMS & set(wanted):
        results += [r for r in claim_corpus() if r.claim in wanted]
    if "nikiforov-planar" in wanted:
        results += claim_planar_grids()
    return results
