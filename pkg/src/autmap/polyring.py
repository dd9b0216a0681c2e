"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients, tied to a :class:`VarRegistry` that fixes the variable order::

    x1^2*x2 - 3   over (x1, x2)   ->   {(2, 1): 1, (0, 0): -3}

The zero polynomial has no terms. Polynomials are immutable and hashable.
Terms are rendered in graded-reverse-lexicographic order, so output text is
deterministic.

Text grammar accepted by :func:`parse_poly`::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' NAT)?
    atom   := INT ('/' INT)? | NAME | '(' expr ')'
    NAME   := [a-zA-Z][a-zA-Z0-9_]*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    NotUnivariate,
    ParseError,
    RegistryMismatch,
    UnknownVariable,
    VariableCollision,
    ZeroPolynomial,
)

Monomial = tuple  # tuple[int, ...], one exponent per registry variable

_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class _NegInfinity:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INFINITY"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__


NEG_INFINITY = _NegInfinity()


@dataclass(frozen=True)
class VarRegistry:
    """Ordered, immutable tuple of variable names."""

    names: tuple

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise VariableCollision(f"duplicate variable names in {names}")
        object.__setattr__(self, "names", names)

    @property
    def arity(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.names

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"variable {name!r} not in registry {self.names}") from None

    def extend(self, name: str) -> "VarRegistry":
        if name in self.names:
            raise VariableCollision(f"variable {name!r} already in registry")
        return VarRegistry(self.names + (name,))

    def without(self, name: str) -> "VarRegistry":
        i = self.index(name)
        return VarRegistry(self.names[:i] + self.names[i + 1:])

    def fresh_name(self, base: str) -> str:
        """``base`` if unused, else ``base_1``, ``base_2``, ..."""
        if base not in self.names:
            return base
        k = 1
        while f"{base}_{k}" in self.names:
            k += 1
        return f"{base}_{k}"


def grevlex_key(mono: Monomial):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def lex_key(mono: Monomial):
    return mono


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("registry", "_terms", "_hash")

    def __init__(self, registry: VarRegistry, terms: Mapping[Monomial, object] = ()):
        n = registry.arity
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise ArityMismatch(f"monomial {mono} has length {len(mono)}, registry arity {n}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = _as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self.registry = registry
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, registry, terms):
        # terms already canonical: Fraction values, nonzero, correct arity
        p = cls.__new__(cls)
        p.registry = registry
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, registry: VarRegistry) -> "Polynomial":
        return cls._raw(registry, {})

    @classmethod
    def const(cls, registry: VarRegistry, value) -> "Polynomial":
        value = _as_fraction(value)
        if not value:
            return cls.zero(registry)
        return cls._raw(registry, {(0,) * registry.arity: value})

    @classmethod
    def var(cls, registry: VarRegistry, name: str) -> "Polynomial":
        i = registry.index(name)
        mono = tuple(1 if j == i else 0 for j in range(registry.arity))
        return cls._raw(registry, {mono: Fraction(1)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.registry.arity, Fraction(0))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self, key=grevlex_key):
        """Terms in descending order under ``key``."""
        return sorted(self._terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def variables(self) -> tuple:
        """Names of the variables that actually occur."""
        used = [False] * self.registry.arity
        for mono in self._terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.registry.names, used) if u)

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.registry != self.registry:
                raise RegistryMismatch(f"{self.registry.names} vs {other.registry.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.registry, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.registry, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.registry, {m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.registry, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.const(self.registry, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.registry)
        return Polynomial._raw(self.registry, {m: v * c for m, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(self.registry, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.registry == other.registry and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.registry, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({render_poly(self)!r}, vars={self.registry.names})"

    def __str__(self):
        return render_poly(self)


def total_degree(p: Polynomial):
    """Maximum total degree over the terms; ``NEG_INFINITY`` for zero."""
    if p.is_zero():
        return NEG_INFINITY
    return max(sum(m) for m in p._terms)


def is_homogeneous(p: Polynomial) -> bool:
    return len({sum(m) for m in p._terms}) <= 1


def partial_derivative(p: Polynomial, var: str) -> Polynomial:
    i = p.registry.index(var)
    out = {}
    for m, c in p._terms.items():
        e = m[i]
        if e:
            out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
    return Polynomial._raw(p.registry, out)


def evaluate(p: Polynomial, point: Sequence) -> Fraction:
    if len(point) != p.registry.arity:
        raise ArityMismatch(f"point has {len(point)} coordinates, registry arity {p.registry.arity}")
    point = [_as_fraction(v) for v in point]
    total = Fraction(0)
    for m, c in p._terms.items():
        t = c
        for v, e in zip(point, m):
            if e:
                t *= v ** e
        total += t
    return total


def substitute(p: Polynomial, images: Mapping[str, Polynomial], registry: VarRegistry) -> Polynomial:
    """Replace each variable of ``p`` by a polynomial over ``registry``."""
    powers = {}
    result = Polynomial.zero(registry)
    gens = [images[name] for name in p.registry.names]
    for m, c in p._terms.items():
        t = Polynomial.const(registry, c)
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                if key not in powers:
                    powers[key] = gens[i] ** e
                t = t * powers[key]
        result = result + t
    return result


def homogenize(p: Polynomial, new_var: str) -> Polynomial:
    """Homogenize with one new last variable ``new_var``."""
    if p.is_zero():
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    registry = p.registry.extend(new_var)
    d = total_degree(p)
    return Polynomial._raw(registry, {m + (d - sum(m),): c for m, c in p._terms.items()})


def dehomogenize(P: Polynomial, var: str) -> Polynomial:
    """Set ``var`` to 1 and drop it from the registry."""
    i = P.registry.index(var)
    registry = P.registry.without(var)
    out = {}
    for m, c in P._terms.items():
        key = m[:i] + m[i + 1:]
        out[key] = out.get(key, 0) + c
    return Polynomial._raw(registry, {m: c for m, c in out.items() if c})


def rename_registry(p: Polynomial, registry: VarRegistry) -> Polynomial:
    """Same exponent data over a registry of equal arity (renamed variables)."""
    if registry.arity != p.registry.arity:
        raise ArityMismatch("registries differ in arity")
    return Polynomial._raw(registry, dict(p._terms))


def embed(p: Polynomial, registry: VarRegistry) -> Polynomial:
    """View ``p`` in a larger registry that contains all of its variable names."""
    idx = [registry.index(name) for name in p.registry.names]
    n = registry.arity
    out = {}
    for m, c in p._terms.items():
        mono = [0] * n
        for j, e in zip(idx, m):
            mono[j] = e
        out[tuple(mono)] = c
    return Polynomial._raw(registry, out)


# univariate helpers and resultant

def _univariate_coeffs(p: Polynomial, var: str) -> list:
    """Dense coefficient list, lowest degree first."""
    i = p.registry.index(var)
    deg = 0
    for m in p._terms:
        if any(e for j, e in enumerate(m) if j != i):
            raise NotUnivariate(f"{render_poly(p)} involves variables other than {var}")
        deg = max(deg, m[i])
    coeffs = [Fraction(0)] * (deg + 1)
    for m, c in p._terms.items():
        coeffs[m[i]] = c
    return coeffs


def _prem(a: list, b: list) -> list:
    """Pseudo-remainder of integer coefficient lists (highest degree first)."""
    r = list(a)
    lb = b[0]
    db = len(b) - 1
    k = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[0]
        r = [lb * x for x in r]
        for j in range(1, len(b)):
            r[j] -= lr * b[j]
        r.pop(0)
        k -= 1
        while r and r[0] == 0:
            r.pop(0)
    if k > 0:
        scale = lb ** k
        r = [scale * x for x in r]
    return r


def _int_resultant(a: list, b: list) -> int:
    """Subresultant-PRS resultant of integer lists (highest degree first)."""
    da, db = len(a) - 1, len(b) - 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if da % 2 and db % 2:
            sign = -1
    if db == 0:
        return sign * b[0] ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        d = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** d
        b = [x // div for x in r]
        g = a[0]
        if d == 0:
            pass
        elif d == 1:
            h = g
        else:
            h = g ** d // h ** (d - 1)
        if len(b) == 1:
            dA = len(a) - 1
            # h^(1-dA) * lc(B)^dA, kept integral by the subresultant theorem
            if dA == 0:
                return sign * h
            return sign * (b[0] ** dA) // (h ** (dA - 1))


def resultant_univariate(p: Polynomial, q: Polynomial, var: str) -> Fraction:
    """Resultant of two univariate polynomials (Sylvester determinant convention).

    Denominators are cleared first; the integer resultant is computed by the
    fraction-free subresultant remainder sequence and rescaled.
    """
    if p.registry != q.registry:
        raise RegistryMismatch(f"{p.registry.names} vs {q.registry.names}")
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    pc = _univariate_coeffs(p, var)
    qc = _univariate_coeffs(q, var)
    dp, dq = len(pc) - 1, len(qc) - 1
    lp = _lcm_denominators(pc)
    lq = _lcm_denominators(qc)
    pi = [int(c * lp) for c in reversed(pc)]
    qi = [int(c * lq) for c in reversed(qc)]
    # res(lp*p, lq*q) = lp^dq * lq^dp * res(p, q)
    return Fraction(_int_resultant(pi, qi), lp ** dq * lq ** dp)


def _lcm_denominators(coeffs) -> int:
    from math import lcm
    out = 1
    for c in coeffs:
        out = lcm(out, Fraction(c).denominator)
    return out


# rendering

def _render_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_monomial(mono: Monomial, names) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for k, (mono, c) in enumerate(p.sorted_terms()):
        neg = c < 0
        a = -c if neg else c
        body = _render_monomial(mono, p.registry.names)
        if not body:
            text = _render_coeff(a)
        elif a == 1:
            text = body
        else:
            text = f"{_render_coeff(a)}*{body}"
        if k == 0:
            chunks.append(f"-{text}" if neg else text)
        else:
            chunks.append(f" - {text}" if neg else f" + {text}")
    return "".join(chunks)


# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("INT", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("NAME", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(start, f"unexpected character {ch!r}")
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, registry):
        self.tokens = _tokenize(text)
        self.i = 0
        self.registry = registry

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise ParseError(tok[2], f"expected {kind}, found {found}")
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            e = int(self.take("INT")[1])
            base = base ** e
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "INT":
            self.take("INT")
            num = int(value)
            if self.peek()[0] == "/":
                self.take("/")
                den_tok = self.take("INT")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError(den_tok[2], "zero denominator")
                return Polynomial.const(self.registry, Fraction(num, den))
            return Polynomial.const(self.registry, num)
        if kind == "NAME":
            self.take("NAME")
            if value not in self.registry:
                raise UnknownVariable(f"unknown variable {value!r} at position {pos}")
            return Polynomial.var(self.registry, value)
        if kind == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if kind == "EOF" else repr(value)
        raise ParseError(pos, f"expected a number, variable or '(', found {found}")


def parse_poly(text: str, registry: VarRegistry) -> Polynomial:
    """Parse ``text`` in the polynomial grammar over ``registry``."""
    parser = _Parser(text, registry)
    result = parser.expr()
    parser.take("EOF")
    return result


def names_in(text: str) -> list:
    """Variable names occurring in ``text``, in order of first appearance."""
    seen = []
    for kind, value, _ in _tokenize(text):
        if kind == "NAME" and value not in seen:
            seen.append(value)
    return seen


def natural_key(name: str):
    """Sort key ordering ``t2`` before ``t10``."""
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name)]


def parse_auto(text: str) -> Polynomial:
    """Parse over a registry of the names found in ``text``, naturally sorted."""
    return parse_poly(text, VarRegistry(sorted(names_in(text), key=natural_key)))
