"""Exact comparison of rationals and numbers of the form a/sqrt(p)."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational


def _sign_and_square(x) -> tuple[int, Fraction]:
    if isinstance(x, Surd):
        return (x.num > 0) - (x.num < 0), Fraction(x.num * x.num, x.rad)
    if isinstance(x, Rational):
        x = Fraction(x)
        return (x > 0) - (x < 0), x * x
    raise TypeError(f"cannot compare exactly with {type(x).__name__}")


def exact_cmp(x, y) -> int:
    """-1, 0 or 1 as x <, ==, > y, for any mix of Surd / int / Fraction."""
    sx, qx = _sign_and_square(x)
    sy, qy = _sign_and_square(y)
    if sx != sy:
        return -1 if sx < sy else 1
    if qx == qy:
        return 0
    # same sign: magnitudes order the values, reversed when negative
    bigger = 1 if qx > qy else -1
    return bigger if sx > 0 else -bigger


@total_ordering
@dataclass(frozen=True)
class Surd:
    """num / sqrt(rad), rad >= 1; ``Surd(-9, 9)`` is -3."""

    num: int
    rad: int

    def __post_init__(self):
        if self.rad < 1:
            raise ValueError("radicand must be positive")

    def __float__(self):
        return self.num / math.sqrt(self.rad)

    def __neg__(self):
        return Surd(-self.num, self.rad)

    def __eq__(self, other):
        try:
            return exact_cmp(self, other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        try:
            return exact_cmp(self, other) < 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(_sign_and_square(self))

    def as_fraction(self) -> Fraction | None:
        """The value as a Fraction when rad is a perfect square, else None."""
        root = math.isqrt(self.rad)
        if root * root == self.rad:
            return Fraction(self.num, root)
        return None

    def __str__(self):
        q = self.as_fraction()
        if q is not None:
            return str(q)
        return f"{self.num}/sqrt({self.rad})"


def fraction_json(q: Fraction) -> dict:
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator, "value": float(q)}


def surd_json(s: Surd) -> dict:
    return {"e": s.num, "p": s.rad, "value": float(s)}
