"""Finite lattice sets with prescribed affine stabilizer.

``build_S(n)`` returns ``S = {0, p_1 e_1, ..., p_{n-1} e_{n-1}}`` with
``p_i`` the i-th prime. The affine maps ``x -> Ax + b`` in
``GL_n(Z) ⋉ Z^n`` that permute ``S`` are exactly the maps whose matrix is
the identity with last column ``(a_1, ..., a_{n-1}, ±1)`` and ``b = 0``;
:func:`stabilizer_bruteforce` checks this on a bounded box of entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, DimensionTooSmall, ResourceCap

DEFAULT_MATRIX_CAP = 10**8


def first_primes(k: int) -> list:
    """The first ``k`` primes, by sieving an interval that is grown as needed."""
    if k <= 0:
        return []
    limit = 16
    while True:
        sieve = np.ones(limit + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, int(limit ** 0.5) + 1):
            if sieve[p]:
                sieve[p * p::p] = False
        primes = np.flatnonzero(sieve)
        if len(primes) >= k:
            return [int(p) for p in primes[:k]]
        limit *= 2


def int_det(rows) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    M = [list(map(int, r)) for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _matmul(A, B) -> tuple:
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*B)) for row in A)


def _matvec(A, v) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


@dataclass(frozen=True)
class LatticeSet:
    n: int
    points: tuple  # points[0] is the origin, points[i] = p_i e_i

    def __contains__(self, v):
        return tuple(v) in self.points

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class AffineLatticeMap:
    A: tuple  # tuple of rows
    b: tuple

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.A)
        b = tuple(int(x) for x in self.b)
        if len(A) != len(b) or any(len(row) != len(b) for row in A):
            raise DimensionMismatch("A must be n x n and b of length n")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.b)

    def det(self) -> int:
        return int_det(self.A)

    def compose(self, other: "AffineLatticeMap") -> "AffineLatticeMap":
        """``self ∘ other``: x -> A(A'x + b') + b."""
        if self.n != other.n:
            raise DimensionMismatch("maps of different dimension")
        A = _matmul(self.A, other.A)
        b = tuple(x + y for x, y in zip(_matvec(self.A, other.b), self.b))
        return AffineLatticeMap(A, b)

    def is_g_form(self) -> bool:
        """Identity except the last column, last entry ±1, zero translation."""
        n = self.n
        for i in range(n):
            for j in range(n - 1):
                if self.A[i][j] != (1 if i == j else 0):
                    return False
        return self.A[n - 1][n - 1] in (1, -1) and not any(self.b)

    def to_g_element(self) -> "GElement":
        if not self.is_g_form():
            raise ValueError("map is not of G-form")
        return GElement(tuple(row[-1] for row in self.A[:-1]), self.A[-1][-1])


@dataclass(frozen=True, order=True)
class GElement:
    a: tuple  # (a_1, ..., a_{n-1})
    eps: int

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be ±1, got {self.eps}")
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))

    @property
    def n(self) -> int:
        return len(self.a) + 1

    @classmethod
    def identity(cls, n: int) -> "GElement":
        return cls((0,) * (n - 1), 1)

    def compose(self, other: "GElement") -> "GElement":
        # [[I, a], [0, e]] @ [[I, a'], [0, e']] = [[I, a' + e' a], [0, e e']]
        if self.n != other.n:
            raise DimensionMismatch("elements of different dimension")
        a = tuple(x + other.eps * y for x, y in zip(other.a, self.a))
        return GElement(a, self.eps * other.eps)

    def inverse(self) -> "GElement":
        return GElement(tuple(-self.eps * v for v in self.a), self.eps)


def build_S(n: int) -> LatticeSet:
    if n < 3:
        raise DimensionTooSmall(f"n must be at least 3, got {n}")
    points = [(0,) * n]
    for i, p in enumerate(first_primes(n - 1)):
        v = [0] * n
        v[i] = p
        points.append(tuple(v))
    return LatticeSet(n, tuple(points))


def g_to_affine(g: GElement) -> AffineLatticeMap:
    n = g.n
    rows = []
    for i in range(n):
        row = [1 if i == j else 0 for j in range(n - 1)]
        row.append(g.a[i] if i < n - 1 else g.eps)
        rows.append(row)
    return AffineLatticeMap(tuple(map(tuple, rows)), (0,) * n)


def apply(m: AffineLatticeMap, v) -> tuple:
    v = tuple(v)
    if len(v) != m.n:
        raise DimensionMismatch(f"vector of length {len(v)} for a map on Z^{m.n}")
    return tuple(x + y for x, y in zip(_matvec(m.A, v), m.b))


def maps_S_to_S(m: AffineLatticeMap, S: LatticeSet) -> bool:
    """True iff ``m`` permutes ``S`` (injective maps of a finite set onto itself)."""
    if m.n != S.n:
        raise DimensionMismatch(f"map on Z^{m.n}, set in Z^{S.n}")
    return {apply(m, s) for s in S} == set(S.points)


def stabilizer_bruteforce(n: int, entry_bound: int, cap: int = DEFAULT_MATRIX_CAP) -> list:
    """All maps with entries of ``A`` and ``b`` in ``[-bound, bound]`` that permute ``S``.

    Every candidate ``(A, b)`` in the box is examined: the matrices are
    enumerated in vectorized blocks, filtered by ``det = ±1``, then each
    translation is tested. Output is in lexicographic order of the flattened
    ``(A, b)`` entries. The result is checked to consist of G-form maps only.
    """
    if n < 3:
        raise DimensionTooSmall(f"n must be at least 3, got {n}")
    if entry_bound < 1:
        raise ValueError("entry_bound must be at least 1")
    width = 2 * entry_bound + 1
    if width ** (n * n) > cap:
        raise ResourceCap(f"{width ** (n * n)} matrices exceed the cap {cap}")

    S = build_S(n)
    pts = np.array(S.points, dtype=np.int64).T  # n x |S|, column k is point k
    values = np.arange(-entry_bound, entry_bound + 1, dtype=np.int64)
    translations = np.array(list(itertools.product(values, repeat=n)), dtype=np.int64)

    # integer code per lattice point; images of S stay within +-radius
    radius = entry_bound * (max(max(abs(x) for x in p) for p in S.points) + 1)
    base = 2 * radius + 1
    weights = base ** np.arange(n, dtype=np.int64)
    target = np.sort((pts.T + radius) @ weights)

    found = []
    # blocks fix the first row; the remaining rows are enumerated in full
    rest = np.array(list(itertools.product(values, repeat=n * (n - 1))), dtype=np.int64)
    for first_row in itertools.product(values, repeat=n):
        block = np.concatenate([np.broadcast_to(np.array(first_row), (len(rest), n)), rest], axis=1)
        mats = block.reshape(-1, n, n)
        dets = np.rint(np.linalg.det(mats.astype(np.float64))).astype(np.int64)
        mats = mats[np.abs(dets) == 1]
        if not len(mats):
            continue
        images = np.transpose(mats @ pts, (0, 2, 1))  # k x |S| x n
        # k x T x |S| codes of A s + b
        codes = (images + radius) @ weights
        shift = translations @ weights
        moved = np.sort(codes[:, None, :] + shift[None, :, None], axis=-1)
        hits = np.argwhere((moved == target).all(axis=-1))
        for mi, ti in hits:
            A = mats[mi].tolist()
            if abs(int_det(A)) != 1:
                continue
            m = AffineLatticeMap(tuple(map(tuple, A)), tuple(int(x) for x in translations[ti]))
            if maps_S_to_S(m, S):
                found.append(m)
    found.sort(key=lambda m: tuple(itertools.chain.from_iterable(m.A)) + m.b)
    for m in found:
        if not m.is_g_form():
            raise AssertionError(f"stabilizer element outside G: {m}")
    return found
