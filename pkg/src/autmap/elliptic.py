"""Exact rational points on long-Weierstrass elliptic curves.

    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6

The default curve is 37A1, ``y^2 + y = x^3 - x``, with base point ``(0, 0)``.
That point has infinite order: by Mazur's theorem a rational torsion point
has order at most 12, so it suffices that ``k*P`` is not the identity for
``1 <= k <= 12``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PointNotOnCurve, PreconditionError, SingularCurve

MAZUR_BOUND = 12


@dataclass(frozen=True)
class Curve:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    label: str | None = None

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant() == 0:
            raise SingularCurve(f"curve {self.coefficients()} is singular")

    def coefficients(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self):
        return self.label or "E" + str(tuple(str(c) for c in self.coefficients()))


@dataclass(frozen=True)
class ECPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("give both coordinates, or neither for the point at infinity")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = ECPoint()

CURVE_37A1 = Curve(0, 0, 1, -1, 0, label="37A1")
P_37A1 = ECPoint(0, 0)


def on_curve(pt: ECPoint, E: Curve) -> bool:
    if pt.is_infinity:
        return True
    x, y = pt.x, pt.y
    return y * y + E.a1 * x * y + E.a3 * y == x ** 3 + E.a2 * x * x + E.a4 * x + E.a6


def _check(pt, E):
    if not on_curve(pt, E):
        raise PointNotOnCurve(f"{pt} is not on {E}")


def neg(pt: ECPoint, E: Curve) -> ECPoint:
    _check(pt, E)
    if pt.is_infinity:
        return pt
    return ECPoint(pt.x, -pt.y - E.a1 * pt.x - E.a3)


def add(p: ECPoint, q: ECPoint, E: Curve) -> ECPoint:
    _check(p, E)
    _check(q, E)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    x1, y1, x2, y2 = p.x, p.y, q.x, q.y
    if x1 == x2:
        if y1 + y2 + E.a1 * x2 + E.a3 == 0:
            return INFINITY
        # tangent; denominator nonzero since p is not 2-torsion
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (2 * y1 + E.a1 * x1 + E.a3)
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = -(lam + E.a1) * x3 - nu - E.a3
    return ECPoint(x3, y3)


def scalar_mul(k: int, P: ECPoint, E: Curve) -> ECPoint:
    """``k * P`` by double-and-add; negative ``k`` uses ``-P``."""
    _check(P, E)
    if k < 0:
        return scalar_mul(-k, neg(P, E), E)
    result = INFINITY
    addend = P
    while k:
        if k & 1:
            result = add(result, addend, E)
        k >>= 1
        if k:
            addend = add(addend, addend, E)
    return result


def multiples_table(P: ECPoint, k_max: int, E: Curve) -> dict:
    """``{k: k*P}`` for ``-k_max <= k <= k_max``, built by repeated addition."""
    _check(P, E)
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    table = {0: INFINITY}
    cur = INFINITY
    for k in range(1, k_max + 1):
        cur = add(cur, P, E)
        table[k] = cur
        table[-k] = neg(cur, E)
    return {k: table[k] for k in range(-k_max, k_max + 1)}


def infinite_order_sanity(P: ECPoint, E: Curve) -> bool:
    _check(P, E)
    if P.is_infinity:
        raise PreconditionError("the point at infinity has finite order")
    cur = P
    for _ in range(MAZUR_BOUND):
        if cur.is_infinity:
            return False
        cur = add(cur, P, E)
    return True
