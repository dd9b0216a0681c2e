"""Bounded brute-force checks of the reduction.

None of these searches can prove that an equation has no solution: an empty
result only means there is no witness within the bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import ConstantInput, EquivalenceViolation, NotUnivariate, PreconditionError, ResourceCap
from .groebner import DEFAULT_MAX_PAIRS
from .lattice import GElement
from .polyring import Polynomial, evaluate, partial_derivative, resultant_univariate
from .reducer import InstanceDescriptor, compile_instance, point_in_Z, sigma_image
from .smoothing import DEFAULT_C_MAX

DEFAULT_BOUND = 10
DEFAULT_EVAL_CAP = 10**8
NO_WITNESS_PHRASE = "no witness within bound {B}"

_BLOCK = 1 << 18
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class SearchReport:
    bound: int
    f_zeros: tuple
    sigma_witnesses: tuple
    consistent: bool
    mode: str
    instance: InstanceDescriptor

    @property
    def verdict(self) -> str:
        if self.sigma_witnesses:
            return f"{len(self.sigma_witnesses)} witness(es) within bound {self.bound}"
        return NO_WITNESS_PHRASE.format(B=self.bound)


def _integer_terms(p: Polynomial):
    den = 1
    for _, c in p.items():
        den = lcm(den, c.denominator)
    return [(m, int(c * den)) for m, c in p.items()]


def _zero_mask(terms, pts: np.ndarray, B: int) -> np.ndarray:
    """Boolean mask of rows of ``pts`` where the integer polynomial vanishes."""
    worst = sum(abs(c) * max(B, 1) ** sum(m) for m, c in terms)
    dtype = np.int64 if worst < _INT64_SAFE else object
    pts = pts.astype(dtype)
    acc = np.zeros(len(pts), dtype=dtype)
    for mono, c in terms:
        t = np.full(len(pts), c, dtype=dtype)
        for i, e in enumerate(mono):
            if e:
                t = t * pts[:, i] ** e
        acc = acc + t
    return acc == 0


def _grid_blocks(dims: int, B: int):
    """Lexicographic blocks of ``[-B, B]^dims`` as int64 arrays."""
    values = np.arange(-B, B + 1, dtype=np.int64)
    width = 2 * B + 1
    inner = 0
    while inner < dims and width ** (inner + 1) <= _BLOCK:
        inner += 1
    inner_grid = (np.array(list(itertools.product(values, repeat=inner)), dtype=np.int64)
                  if inner else np.zeros((1, 0), dtype=np.int64))
    for prefix in itertools.product(values.tolist(), repeat=dims - inner):
        head = np.broadcast_to(np.array(prefix, dtype=np.int64), (len(inner_grid), dims - inner))
        yield np.concatenate([head, inner_grid], axis=1)


def search_integer_zeros(f: Polynomial, B: int, cap: int = DEFAULT_EVAL_CAP) -> list:
    """All integer zeros of ``f`` in ``[-B, B]^m``, lexicographically ordered."""
    if B < 0:
        raise PreconditionError("bound must be nonnegative")
    m = f.registry.arity
    total = (2 * B + 1) ** m
    if total > cap:
        raise ResourceCap(f"{total} evaluations exceed the cap {cap}")
    if f.is_zero():
        return [tuple(p) for p in itertools.product(range(-B, B + 1), repeat=m)]
    terms = _integer_terms(f)
    out = []
    for block in _grid_blocks(m, B):
        for row in block[_zero_mask(terms, block, B)]:
            out.append(tuple(int(v) for v in row))
    return out


def search_automorphisms(desc: InstanceDescriptor, B: int, cap: int = DEFAULT_EVAL_CAP) -> list:
    """All ``g`` with ``|a_i| <= B`` and ``eps = ±1`` moving the base point into ``Z``."""
    if B < 0:
        raise PreconditionError("bound must be nonnegative")
    n = desc.n
    total = 2 * (2 * B + 1) ** (n - 1)
    if total > cap:
        raise ResourceCap(f"{total} evaluations exceed the cap {cap}")
    terms = _integer_terms(desc.Z_equation)
    out = []
    for block in _grid_blocks(n - 1, B):
        for eps in (-1, 1):
            pts = np.concatenate([block, np.full((len(block), 1), eps, dtype=np.int64)], axis=1)
            for row in block[_zero_mask(terms, pts, B)]:
                out.append(GElement(tuple(int(v) for v in row), eps))
    out.sort()
    return out


def expected_witnesses(zeros, B: int) -> set:
    """Witnesses predicted from the zeros of the solved polynomial.

    A zero ``a`` gives ``F``-zeros ``(a, 0)`` and ``(a, 1)``; with the last
    projective coordinate ``-1`` the same points appear negated.
    """
    out = set()
    for a in zeros:
        for yv in (0, 1):
            if yv <= B:
                out.add(GElement(tuple(a) + (yv,), 1))
                out.add(GElement(tuple(-v for v in a) + (-yv,), -1))
    return out


def check_instance(desc: InstanceDescriptor, B: int = DEFAULT_BOUND, cap: int = DEFAULT_EVAL_CAP) -> SearchReport:
    """Run both bounded searches on a compiled instance and cross-check them."""
    h = desc.solved_polynomial
    zeros = search_integer_zeros(h, B, cap)
    witnesses = search_automorphisms(desc, B, cap)
    for a in zeros:
        if evaluate(h, a) != 0:
            raise EquivalenceViolation(f"reported zero {a} does not vanish")
    for g in witnesses:
        if not point_in_Z(desc, sigma_image(g, desc.n)):
            raise EquivalenceViolation(f"reported witness {g} does not map x into Z")
    expected = expected_witnesses(zeros, B)
    if set(witnesses) != expected:
        extra = sorted(set(witnesses) - expected)
        missing = sorted(expected - set(witnesses))
        raise EquivalenceViolation(f"witness mismatch: unexpected {extra[:5]}, missing {missing[:5]}")
    consistent = bool(zeros) == bool(witnesses)
    if not consistent:
        raise EquivalenceViolation("zeros and witnesses disagree on existence")
    return SearchReport(B, tuple(zeros), tuple(witnesses), consistent, desc.mode, desc)


def check_equivalence(f: Polynomial, B: int = DEFAULT_BOUND, c_max: int = DEFAULT_C_MAX,
                      mode: str = "Z", cap: int = DEFAULT_EVAL_CAP, order: str = "grevlex",
                      max_pairs: int = DEFAULT_MAX_PAIRS) -> SearchReport:
    """Compile ``f`` and check the zero/witness correspondence in the box ``[-B, B]``."""
    if f.is_zero() or f.is_constant():
        raise ConstantInput(f"f must be nonconstant, got {f}")
    desc = compile_instance(f, mode=mode, c_max=c_max, order=order, max_pairs=max_pairs)
    return check_instance(desc, B, cap)


def univariate_smoothness_oracle(f: Polynomial, c: int) -> bool:
    """Smoothness of ``c*(y^2 - y) + f^2`` for univariate ``f``, by elimination.

    At a singular point ``2y - 1 = 0``, so ``f^2 = c/4`` and ``f * f' = 0``;
    since ``c > 0`` this forces ``f' = 0``. Hence the surface is singular iff
    ``f'`` and ``4 f^2 - c`` share a root, i.e. their resultant vanishes.
    """
    if f.is_zero() or f.is_constant():
        raise ConstantInput(f"f must be nonconstant, got {f}")
    used = f.variables()
    if len(used) != 1:
        raise NotUnivariate(f"{f} is not univariate")
    if c < 1:
        raise PreconditionError("c must be a positive integer")
    (x,) = used
    df = partial_derivative(f, x)
    if df.is_constant():
        return True
    g = f * f * 4 - c
    return resultant_univariate(df, g, x) != Fraction(0)
