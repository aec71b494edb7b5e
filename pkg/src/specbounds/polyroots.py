"""Exact characteristic polynomials and real-root isolation (Sturm sequences).

Polynomials are lists of Fractions, lowest degree first.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def _trim(p: Poly) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def charpoly(matrix: Sequence[Sequence[int | Fraction]]) -> Poly:
    """det(xI - M) by Faddeev-LeVerrier, exact over the rationals."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # m <- a @ m + c_{n-k+1} I
        prod = [[sum(a[i][l] * m[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        m = prod
        am_trace = sum(sum(a[i][l] * m[l][i] for l in range(n)) for i in range(n))
        coeffs[n - k] = -am_trace / k
    return coeffs


def evaluate(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return _trim([i * c for i, c in enumerate(p)][1:] or [Fraction(0)])


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    a = list(a)
    b = _trim(list(b))
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b) and a != [0]:
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        if not a:
            a = [Fraction(0)]
    return _trim(q), _trim(a)


def gcd_poly(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [0]:
        a, b = b, divmod_poly(a, b)[1]
    return [c / a[-1] for c in a]


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: p = lc * prod f_i^i with squarefree, coprime f_i."""
    out = []
    dp = derivative(p)
    a = gcd_poly(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = _trim([ci - bi for ci, bi in zip(_pad(c, len(b)), _pad(derivative(b), len(b)))])
    i = 1
    while len(b) > 1:
        a = gcd_poly(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = _trim([ci - bi for ci, bi in zip(_pad(c, len(b)), _pad(derivative(b), len(b)))])
        i += 1
    return out


def _pad(p: Poly, size: int) -> Poly:
    return list(p) + [Fraction(0)] * (size - len(p))


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [_trim(list(p)), derivative(p)]
    while chain[-1] != [0]:
        r = divmod_poly(chain[-2], chain[-1])[1]
        if r == [0]:
            break
        chain.append([-c for c in r])
    return chain


def _sign_changes(chain: list[Poly], x: Fraction) -> int:
    signs = [s for s in (evaluate(q, x) for q in chain) if s != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def real_roots(p: Poly, tol: float = 1e-14) -> list[float]:
    """All real roots of p with multiplicity, ascending.

    Each root is bracketed exactly by Sturm counts and bisected in rational
    arithmetic until the bracket is narrower than ``tol``.
    """
    roots: list[float] = []
    for f, mult in squarefree_factors(_trim(list(p))):
        for r in _isolate(f, Fraction(tol)):
            roots.extend([r] * mult)
    return sorted(roots)


def _isolate(f: Poly, tol: Fraction) -> list[float]:
    chain = sturm_chain(f)
    bound = 1 + max(abs(c / f[-1]) for c in f[:-1]) if len(f) > 1 else Fraction(1)
    lo, hi = -bound, bound
    out = []
    pending = [(lo, hi)]
    while pending:
        a, b = pending.pop()
        count = _sign_changes(chain, a) - _sign_changes(chain, b)
        if count == 0:
            continue
        if count == 1:
            out.append(_bisect(f, a, b, tol))
            continue
        mid = (a + b) / 2
        if evaluate(f, mid) == 0:
            out.append(float(mid))
            # keep mid out of both halves
            eps = (b - a) / 1024
            while _sign_changes(chain, mid - eps) - _sign_changes(chain, mid + eps) != 1:
                eps /= 2
            pending.append((a, mid - eps))
            pending.append((mid + eps, b))
        else:
            pending.append((a, mid))
            pending.append((mid, b))
    return out


def _bisect(f: Poly, a: Fraction, b: Fraction, tol: Fraction) -> float:
    # single root in (a, b]
    fb = evaluate(f, b)
    if fb == 0:
        return float(b)
    while b - a > tol:
        mid = (a + b) / 2
        fm = evaluate(f, mid)
        if fm == 0:
            return float(mid)
        if (fm > 0) == (fb > 0):
            b, fb = mid, fm
        else:
            a = mid
    return float((a + b) / 2)
