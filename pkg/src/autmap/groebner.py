"""Buchberger's algorithm over the rationals.

Internally every polynomial is a dict ``{monomial: int}`` kept primitive
(coefficients coprime, positive leading coefficient); reductions are
fraction-free. Rational coefficients only reappear when the final reduced
basis is made monic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import EmptyInput, RegistryMismatch, ResourceCap
from .polyring import Polynomial, VarRegistry, grevlex_key, lex_key

DEFAULT_MAX_PAIRS = 100_000

_KEYS = {"grevlex": grevlex_key, "lex": lex_key}


@dataclass(frozen=True)
class TermOrder:
    kind: str = "grevlex"
    registry: VarRegistry | None = None

    def __post_init__(self):
        if self.kind not in _KEYS:
            raise ValueError(f"unknown term order {self.kind!r}; use 'grevlex' or 'lex'")

    @property
    def key(self):
        return _KEYS[self.kind]


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple
    order: TermOrder
    source: tuple = ()
    pairs_processed: int = field(default=0, compare=False)

    @property
    def registry(self) -> VarRegistry:
        return self.order.registry

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0] == 1

    def leading_monomials(self) -> list:
        key = self.order.key
        return [max(g.terms, key=key) for g in self.generators]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# internal integer representation

def _to_int(p: Polynomial) -> dict:
    den = 1
    for _, c in p.items():
        den = lcm(den, c.denominator)
    return _primitive({m: int(c * den) for m, c in p.items()}, None)


def _primitive(terms: dict, key) -> dict:
    if not terms:
        return terms
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            break
    if key is not None and terms[max(terms, key=key)] < 0:
        g = -g
    if g != 1:
        terms = {m: c // g for m, c in terms.items()}
    return terms


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Elem:
    __slots__ = ("terms", "lm", "lc")

    def __init__(self, terms, key):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]


def _reduce_int(terms: dict, basis: list, key) -> dict:
    """Full fraction-free reduction; returns the primitive remainder."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for g in basis:
            if _divides(g.lm, m):
                break
        else:
            rem[m] = p.pop(m)
            continue
        q = _mono_div(m, g.lm)
        d = gcd(c, g.lc)
        a = g.lc // d
        b = c // d
        if a != 1:
            p = {k: v * a for k, v in p.items()}
            rem = {k: v * a for k, v in rem.items()}
        for gm, gc in g.terms.items():
            t = tuple(x + y for x, y in zip(gm, q))
            v = p.get(t, 0) - b * gc
            if v:
                p[t] = v
            else:
                p.pop(t, None)
        if len(rem) > 8 or a != 1:
            # keep coefficient size bounded
            g2 = 0
            for v in rem.values():
                g2 = gcd(g2, v)
            for v in p.values():
                g2 = gcd(g2, v)
                if g2 == 1:
                    break
            if g2 > 1:
                p = {k: v // g2 for k, v in p.items()}
                rem = {k: v // g2 for k, v in rem.items()}
    return _primitive(rem, key)


def _is_constant(terms) -> bool:
    return len(terms) == 1 and not any(next(iter(terms)))


def _check_inputs(generators):
    gens = list(generators)
    if not gens:
        raise EmptyInput("no generators")
    registry = gens[0].registry
    for g in gens:
        if g.registry != registry:
            raise RegistryMismatch(f"{registry.names} vs {g.registry.names}")
    if all(g.is_zero() for g in gens):
        raise EmptyInput("all generators are zero")
    return gens, registry


def buchberger(generators, order: TermOrder | str = "grevlex", max_pairs: int = DEFAULT_MAX_PAIRS) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``generators``.

    Pairs are taken smallest-lcm first; coprime leading monomials and the
    chain criterion discard pairs without reduction. Raises ``ResourceCap``
    once more than ``max_pairs`` S-polynomials have been reduced.
    """
    gens, registry = _check_inputs(generators)
    if isinstance(order, str):
        order = TermOrder(order, registry)
    elif order.registry is None:
        order = TermOrder(order.kind, registry)
    elif order.registry != registry:
        raise RegistryMismatch("term order registry differs from generators")
    key = order.key
    source = tuple(gens)

    def unit(count):
        return GroebnerBasis((Polynomial.const(registry, 1),), order, source, count)

    basis: list = []
    pairs: set = set()

    def add(terms):
        idx = len(basis)
        basis.append(_Elem(terms, key))
        for i in range(idx):
            pairs.add((i, idx))

    for g in sorted((_to_int(g) for g in gens if not g.is_zero()), key=lambda t: key(max(t, key=key))):
        r = _reduce_int(g, basis, key)
        if not r:
            continue
        if _is_constant(r):
            return unit(0)
        add(r)

    processed = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: _pair_rank(basis, ij, key))
        pairs.discard((i, j))
        gi, gj = basis[i], basis[j]
        m = _mono_lcm(gi.lm, gj.lm)
        if all(a == 0 or b == 0 for a, b in zip(gi.lm, gj.lm)):
            continue
        if _chain_criterion(basis, pairs, i, j, m):
            continue
        processed += 1
        if processed > max_pairs:
            raise ResourceCap(f"Buchberger exceeded {max_pairs} S-pair reductions")
        s = _s_poly(gi, gj, m)
        r = _reduce_int(s, basis, key)
        if not r:
            continue
        if _is_constant(r):
            return unit(processed)
        add(r)

    return GroebnerBasis(_interreduce(basis, registry, key), order, source, processed)


def _pair_rank(basis, ij, key):
    i, j = ij
    m = _mono_lcm(basis[i].lm, basis[j].lm)
    return (key(m), i, j)


def _chain_criterion(basis, pairs, i, j, m) -> bool:
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        if _divides(basis[k].lm, m):
            return True
    return False


def _s_poly(gi: _Elem, gj: _Elem, m) -> dict:
    qi = _mono_div(m, gi.lm)
    qj = _mono_div(m, gj.lm)
    d = gcd(gi.lc, gj.lc)
    ci = gj.lc // d
    cj = gi.lc // d
    out = {}
    for gm, gc in gi.terms.items():
        t = tuple(x + y for x, y in zip(gm, qi))
        out[t] = out.get(t, 0) + ci * gc
    for gm, gc in gj.terms.items():
        t = tuple(x + y for x, y in zip(gm, qj))
        v = out.get(t, 0) - cj * gc
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _interreduce(basis, registry, key) -> tuple:
    elems = list(basis)
    # drop elements whose leading monomial is divisible by another's
    minimal = []
    for idx, e in enumerate(elems):
        redundant = False
        for jdx, other in enumerate(elems):
            if jdx == idx:
                continue
            if _divides(other.lm, e.lm) and (other.lm != e.lm or jdx < idx):
                redundant = True
                break
        if not redundant:
            minimal.append(e)
    reduced = []
    for idx, e in enumerate(minimal):
        others = [o for jdx, o in enumerate(minimal) if jdx != idx]
        r = _reduce_int(e.terms, others, key)
        reduced.append(_Elem(r, key))
    out = []
    for e in sorted(reduced, key=lambda e: key(e.lm), reverse=True):
        lc = e.lc
        out.append(Polynomial(registry, {m: Fraction(c, lc) for m, c in e.terms.items()}))
    return tuple(out)


def normal_form(p: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of ``p`` on division by the (monic) basis elements."""
    if p.registry != basis.registry:
        raise RegistryMismatch(f"{p.registry.names} vs {basis.registry.names}")
    key = basis.order.key
    divisors = []
    for g in basis.generators:
        lm = max(g.terms, key=key)
        divisors.append((lm, g.coefficient(lm), g.terms))
    work = p.terms
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for lm, lc, gterms in divisors:
            if _divides(lm, m):
                break
        else:
            rem[m] = work.pop(m)
            continue
        q = _mono_div(m, lm)
        factor = c / lc
        for gm, gc in gterms.items():
            t = tuple(x + y for x, y in zip(gm, q))
            v = work.get(t, 0) - factor * gc
            if v:
                work[t] = v
            else:
                work.pop(t, None)
    return Polynomial(p.registry, rem)


def is_unit_ideal(generators, order: TermOrder | str = "grevlex", max_pairs: int = DEFAULT_MAX_PAIRS):
    """``(True, basis)`` iff the generated ideal contains 1; the basis is the certificate."""
    basis = buchberger(generators, order, max_pairs)
    return basis.is_unit(), basis


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder | str = "grevlex") -> Polynomial:
    """Rational S-polynomial, for checking Buchberger's criterion from outside."""
    key = _KEYS[order] if isinstance(order, str) else order.key
    lf = max(f.terms, key=key)
    lg = max(g.terms, key=key)
    m = _mono_lcm(lf, lg)
    reg = f.registry
    mf = Polynomial(reg, {_mono_div(m, lf): 1 / f.coefficient(lf)})
    mg = Polynomial(reg, {_mono_div(m, lg): 1 / g.coefficient(lg)})
    return mf * f - mg * g
