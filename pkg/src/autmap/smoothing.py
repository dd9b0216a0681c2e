"""Smoothing a Diophantine polynomial into a smooth affine hypersurface.

For nonconstant integer ``f`` the candidate ``F_c = c*(y^2 - y) + f^2`` has
the same integer solvability as ``f`` (both summands are nonnegative on
integers), and ``deg F_c = 2 deg f``. Only finitely many ``c`` give a singular
hypersurface, so trying ``c = 1, 2, ...`` terminates; each verdict carries a
reduced Gröbner basis of the Jacobian ideal as its certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConstantInput, CSearchExhausted, NonIntegerInput, ZeroPolynomial
from .groebner import DEFAULT_MAX_PAIRS, GroebnerBasis, TermOrder, is_unit_ideal
from .polyring import Polynomial, embed, partial_derivative, total_degree

DEFAULT_C_MAX = 1000
DEFAULT_Y_NAME = "y"

# Smooth + f nonconstant forces geometric integrality: a factorization
# z^2 - g = (z + h)(z - h) would make X singular where z = h = 0.
GEOMETRIC_INTEGRALITY_NOTE = "guaranteed: smooth with nonconstant f implies geometrically integral"


@dataclass(frozen=True)
class SmoothingResult:
    f: Polynomial
    c: int
    F: Polynomial
    y_name: str
    certificate: GroebnerBasis
    rejected: tuple = ()  # (c', counter-certificate basis) per rejected c' < c
    degree_in: int = 0
    degree_out: int = 0
    geometrically_integral: str = field(default=GEOMETRIC_INTEGRALITY_NOTE)


def _require_nonconstant_integer(f: Polynomial):
    if f.is_zero() or f.is_constant():
        raise ConstantInput(f"f must be nonconstant, got {f}")
    if not f.has_integer_coefficients():
        raise NonIntegerInput(f"f must have integer coefficients, got {f}")


def lift_registry(f: Polynomial, y_name: str = DEFAULT_Y_NAME):
    """Registry of ``f`` plus a fresh smoothing variable (renamed on collision)."""
    name = f.registry.fresh_name(y_name) if y_name in f.registry else y_name
    return f.registry.extend(name), name


def build_candidate(f: Polynomial, c: int, y_name: str = DEFAULT_Y_NAME) -> Polynomial:
    if f.is_zero() or f.is_constant():
        raise ConstantInput(f"f must be nonconstant, got {f}")
    if not isinstance(c, int) or c < 1:
        raise ValueError(f"c must be a positive integer, got {c!r}")
    registry, name = lift_registry(f, y_name)
    y = Polynomial.var(registry, name)
    fe = embed(f, registry)
    return (y * y - y).scale(c) + fe * fe


def jacobian_generators(F: Polynomial) -> list:
    if F.is_zero():
        raise ZeroPolynomial("Jacobian of the zero polynomial")
    return [F] + [partial_derivative(F, v) for v in F.registry.names]


def is_smooth_affine_hypersurface(F: Polynomial, order: TermOrder | str = "grevlex",
                                  max_pairs: int = DEFAULT_MAX_PAIRS):
    """``(smooth, basis)``: smooth over Q iff the Jacobian ideal is the unit ideal."""
    if F.is_zero() or F.is_constant():
        raise ConstantInput(f"F must be nonconstant, got {F}")
    return is_unit_ideal(jacobian_generators(F), order, max_pairs)


def smooth_lift(f: Polynomial, c_max: int = DEFAULT_C_MAX, order: TermOrder | str = "grevlex",
                y_name: str = DEFAULT_Y_NAME, max_pairs: int = DEFAULT_MAX_PAIRS) -> SmoothingResult:
    """Least ``c`` in ``[1, c_max]`` making ``c*(y^2 - y) + f^2`` smooth."""
    _require_nonconstant_integer(f)
    if c_max < 1:
        raise ValueError("c_max must be at least 1")
    _, name = lift_registry(f, y_name)
    rejected = []
    for c in range(1, c_max + 1):
        F = build_candidate(f, c, y_name)
        smooth, basis = is_smooth_affine_hypersurface(F, order, max_pairs)
        if smooth:
            return SmoothingResult(
                f=f, c=c, F=F, y_name=name, certificate=basis, rejected=tuple(rejected),
                degree_in=total_degree(f), degree_out=total_degree(F),
            )
        rejected.append((c, basis))
    raise CSearchExhausted(f"no smooth candidate for c <= {c_max}; raise c_max")
