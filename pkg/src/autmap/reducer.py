"""Compile a Diophantine polynomial into an automorphism-mapping instance.

Pipeline for ``f`` in ``m`` variables:

1. (N-mode only) replace every variable by a sum of four squares, so that
   solvability over the naturals becomes solvability over the integers;
2. smooth: ``F = c*(y^2 - y) + f^2`` with the least good ``c``;
3. homogenize ``F`` with one more variable, giving ``F_hat`` in ``n = m + 2``
   variables, whose zero set ``Z`` lives in ``P^{n-1}``;
4. build the lattice set ``S`` in ``Z^n`` and its image ``S'`` in ``E^n``
   under ``s -> (s_1 P, ..., s_n P)``.

The blowup ``X`` of ``E^n`` at ``S'`` is kept symbolic. An automorphism with
last column ``(a_1, ..., a_{n-1}, eps)`` sends the base point ``(0:...:0:1)``
to ``(a_1 : ... : a_{n-1} : eps)``, so ``f`` has an integer zero exactly when
some automorphism moves the base point into ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .elliptic import CURVE_37A1, P_37A1, Curve, ECPoint, infinite_order_sanity, multiples_table, on_curve
from .errors import (
    DimensionMismatch,
    InfiniteOrderSanityFailed,
    PreconditionError,
    ZeroPolynomial,
    ZeroProjectivePoint,
)
from .groebner import DEFAULT_MAX_PAIRS
from .lattice import GElement, LatticeSet, build_S
from .polyring import (
    Polynomial,
    VarRegistry,
    evaluate,
    homogenize,
    is_homogeneous,
    substitute,
    total_degree,
)
from .smoothing import DEFAULT_C_MAX, SmoothingResult, smooth_lift

MODES = ("Z", "N")
HOMOGENIZING_NAME = "t_h"
BLOWUP_MARKER = "blowup of E^n at S'"


def four_squares_transform(f: Polynomial) -> Polynomial:
    """Substitute ``v -> v_1^2 + v_2^2 + v_3^2 + v_4^2`` for every variable ``v``."""
    if f.is_zero():
        raise ZeroPolynomial("four-squares transform of the zero polynomial")
    names = []
    for v in f.registry.names:
        names.extend(f"{v}_{k}" for k in range(1, 5))
    registry = VarRegistry(names)
    images = {}
    for v in f.registry.names:
        s = Polynomial.zero(registry)
        for k in range(1, 5):
            w = Polynomial.var(registry, f"{v}_{k}")
            s = s + w * w
        images[v] = s
    return substitute(f, images, registry)


def lagrange_four_squares(n: int) -> tuple:
    """``(a, b, c, d)`` with ``a >= b >= c >= d >= 0`` and squares summing to ``n``."""
    if n < 0:
        raise PreconditionError("negative integers are not sums of squares")
    for a in range(isqrt(n), -1, -1):
        r1 = n - a * a
        for b in range(min(a, isqrt(r1)), -1, -1):
            r2 = r1 - b * b
            for c in range(min(b, isqrt(r2)), -1, -1):
                r3 = r2 - c * c
                d = isqrt(r3)
                if d * d == r3 and d <= c:
                    return (a, b, c, d)
    raise AssertionError("unreachable: every natural number is a sum of four squares")


def lift_natural_solution(point) -> tuple:
    """Integer zero of the four-squares transform from a natural zero of ``f``."""
    out = []
    for v in point:
        out.extend(lagrange_four_squares(int(v)))
    return tuple(out)


@dataclass(frozen=True)
class InstanceDescriptor:
    n: int
    curve: Curve
    P: ECPoint
    S: LatticeSet
    S_prime: tuple  # one n-tuple of ECPoint per point of S, same order
    base_point_x: tuple
    Z_equation: Polynomial
    smoothing: SmoothingResult
    mode: str
    provenance: dict = field(compare=False)
    blowup: str = BLOWUP_MARKER

    @property
    def solved_polynomial(self) -> Polynomial:
        """The polynomial whose integer zeros the instance encodes (transformed in N-mode)."""
        return self.smoothing.f

    @property
    def homogenizing_variable(self) -> str:
        return self.Z_equation.registry.names[-1]


def realize_S_prime(S: LatticeSet, P: ECPoint, E: Curve) -> tuple:
    k_max = max(max(abs(v) for v in s) for s in S.points) or 1
    table = multiples_table(P, k_max, E)
    return tuple(tuple(table[v] for v in s) for s in S.points)


def compile_instance(f: Polynomial, mode: str = "Z", c_max: int = DEFAULT_C_MAX,
                     curve: Curve = CURVE_37A1, P: ECPoint = P_37A1,
                     order: str = "grevlex", max_pairs: int = DEFAULT_MAX_PAIRS) -> InstanceDescriptor:
    if mode not in MODES:
        raise PreconditionError(f"mode must be one of {MODES}, got {mode!r}")
    if not infinite_order_sanity(P, curve):
        raise InfiniteOrderSanityFailed(f"{P} has finite order on {curve}")
    target = four_squares_transform(f) if mode == "N" else f
    smoothing = smooth_lift(target, c_max=c_max, order=order, max_pairs=max_pairs)
    F = smoothing.F
    h_name = F.registry.fresh_name(HOMOGENIZING_NAME)
    F_hat = homogenize(F, h_name)
    n = F_hat.registry.arity
    S = build_S(n)
    S_prime = realize_S_prime(S, P, curve)
    provenance = {
        "f": f,
        "mode": mode,
        "four_squares": target if mode == "N" else None,
        "F": F,
        "c": smoothing.c,
        "smoothing_variable": smoothing.y_name,
        "homogenizing_variable": h_name,
        "order": order,
    }
    return InstanceDescriptor(
        n=n, curve=curve, P=P, S=S, S_prime=S_prime,
        base_point_x=(0,) * (n - 1) + (1,),
        Z_equation=F_hat, smoothing=smoothing, mode=mode, provenance=provenance,
    )


def sigma_image(g: GElement, n: int | None = None) -> tuple:
    """Image of the base point ``(0:...:0:1)``: the last column of ``g``."""
    if n is not None and g.n != n:
        raise DimensionMismatch(f"element for n={g.n}, instance has n={n}")
    return g.a + (g.eps,)


def normalize_projective(pt) -> tuple:
    """Primitive integer representative, last nonzero coordinate positive."""
    pt = [Fraction(v) for v in pt]
    if not any(pt):
        raise ZeroProjectivePoint("(0:...:0) is not a projective point")
    den = 1
    for v in pt:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in pt]
    g = 0
    for v in ints:
        g = gcd(g, v)
    last = next(v for v in reversed(ints) if v)
    if last < 0:
        g = -g
    return tuple(v // g for v in ints)


def point_in_Z(desc: InstanceDescriptor, pt) -> bool:
    pt = tuple(pt)
    if len(pt) != desc.n:
        raise DimensionMismatch(f"point has {len(pt)} coordinates, instance has n={desc.n}")
    if not any(pt):
        raise ZeroProjectivePoint("(0:...:0) is not a projective point")
    return evaluate(desc.Z_equation, pt) == 0


def check_descriptor(desc: InstanceDescriptor) -> None:
    """Raise ``AssertionError`` if the descriptor's structural invariants fail."""
    F_hat = desc.Z_equation
    assert is_homogeneous(F_hat), "Z equation is not homogeneous"
    assert desc.n == desc.smoothing.F.registry.arity + 1
    assert desc.n == F_hat.registry.arity
    assert total_degree(F_hat) == total_degree(desc.smoothing.F)
    assert desc.base_point_x == (0,) * (desc.n - 1) + (1,)
    assert len(desc.S_prime) == len(desc.S.points)
    for tup in desc.S_prime:
        assert len(tup) == desc.n
        for pt in tup:
            assert on_curve(pt, desc.curve)
