"""Acceptance criteria, one test each; every test reports a PASS/FAIL line."""

import io
import itertools
import time

import pytest

from autmap.cli import run
from autmap.elliptic import CURVE_37A1, INFINITY, P_37A1, ECPoint, infinite_order_sanity, on_curve, scalar_mul
from autmap.lattice import stabilizer_bruteforce
from autmap.oracle import check_equivalence, search_integer_zeros, univariate_smoothness_oracle
from autmap.polyring import VarRegistry, parse_auto, parse_poly, total_degree
from autmap.reducer import compile_instance, four_squares_transform, lagrange_four_squares
from autmap.smoothing import build_candidate, is_smooth_affine_hypersurface, smooth_lift

from conftest import ACCEPTANCE_LINES
from oracles import brute_eval, stabilizer_reference


class Criterion:
    def __init__(self, number, name, limit):
        self.number, self.name, self.limit = number, name, limit

    def __enter__(self):
        self.start = time.perf_counter()
        self.failures = []
        return self

    def check(self, ok, detail):
        if not ok:
            self.failures.append(detail)

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and not self.failures and elapsed < self.limit
        why = "" if ok else f" ({exc!r})" if exc_type else f" ({self.failures[:3]})" if self.failures else " (too slow)"
        line = f"[{'PASS' if ok else 'FAIL'}] {self.number}. {self.name}: {elapsed:.2f}s, limit {self.limit}s{why}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert exc_type is not None or ok, line
        return False


@pytest.fixture(scope="module")
def lifts(corpus):
    return [smooth_lift(f) for f in corpus]


def test_1_degree_law(corpus):
    with Criterion(1, "degree law on corpus", 60) as cr:
        assert len(corpus) >= 50
        for f in corpus:
            F = smooth_lift(f).F
            cr.check(total_degree(F) == 2 * total_degree(f), f)


def test_2_smoothing_certificate(corpus, lifts):
    with Criterion(2, "smoothing certificate and resultant agreement", 300) as cr:
        for r in lifts:
            cr.check(r.certificate.is_unit() and len(r.certificate) == 1, r.f)
            cr.check(is_smooth_affine_hypersurface(r.F)[0], r.f)
        uni = [r for r in lifts if len(r.f.variables()) == 1]
        cr.check(len(uni) > 0, "no univariate polynomials in corpus")
        for r in uni:
            for c in range(1, max(r.c, 5) + 1):
                groebner = is_smooth_affine_hypersurface(build_candidate(r.f, c))[0]
                cr.check(groebner == univariate_smoothness_oracle(r.f, c), (r.f, c))


def test_3_known_singular_case():
    X = VarRegistry(["x"])
    with Criterion(3, "known singular case", 1) as cr:
        f = parse_poly("2*x^3 - 3*x^2", X)
        F4 = parse_poly("4*(y^2 - y) + (2*x^3 - 3*x^2)^2", VarRegistry(["x", "y"]))
        cr.check(F4 == build_candidate(f, 4), "candidate mismatch")
        cr.check(not is_smooth_affine_hypersurface(F4)[0], "F4 reported smooth")
        cr.check(smooth_lift(f).c == 1, "c != 1")
        bad = [c for c in range(1, 11) if not univariate_smoothness_oracle(f, c)]
        cr.check(bad == [4], bad)


def test_4_solution_transfer(corpus, lifts):
    B = 5
    with Criterion(4, "solution transfer at B = 5", 300) as cr:
        box = range(-B, B + 1)
        for r in lifts:
            m = r.f.registry.arity
            f_zeros = [a for a in itertools.product(box, repeat=m) if brute_eval(r.f, a) == 0]
            expected = {a + (yv,) for a in f_zeros for yv in (0, 1)}
            # scan every y in the box, not just 0 and 1
            F_zeros = set()
            for a in itertools.product(box, repeat=m):
                fa = brute_eval(r.f, a)
                for yv in box:
                    val = brute_eval(r.F, a + (yv,))
                    cr.check(val == r.c * (yv * yv - yv) + fa * fa, (r.f, a, yv))
                    if val == 0:
                        F_zeros.add(a + (yv,))
            cr.check(F_zeros == expected, r.f)


def test_5_lattice_stabilizer():
    with Criterion(5, "lattice stabilizer counts", 600) as cr:
        maps1 = stabilizer_bruteforce(3, 1)
        cr.check(len(maps1) == 18, len(maps1))
        cr.check(all(m.is_g_form() and m.b == (0, 0, 0) for m in maps1), "B=1 shape")
        maps2 = stabilizer_bruteforce(3, 2)
        cr.check(len(maps2) == 50, len(maps2))
        elems = {m.to_g_element() for m in maps2 if m.is_g_form()}
        want = {(a1, a2, eps) for a1 in range(-2, 3) for a2 in range(-2, 3) for eps in (-1, 1)}
        cr.check({g.a + (g.eps,) for g in elems} == want, "B=2 set")
        ref = stabilizer_reference(2)
        cr.check(len(ref) == 50, f"reference count {len(ref)}")


def test_6_elliptic_group_law():
    with Criterion(6, "elliptic group law on 37A1", 1) as cr:
        E, P = CURVE_37A1, P_37A1
        cr.check(scalar_mul(2, P, E) == ECPoint(1, 0), "2P")
        cr.check(scalar_mul(3, P, E) == ECPoint(-1, -1), "3P")
        cr.check(infinite_order_sanity(P, E), "sanity")
        for k in range(-12, 13):
            Q = scalar_mul(k, P, E)
            cr.check(on_curve(Q, E) and (Q != INFINITY or k == 0), k)


def test_7_end_to_end_equivalence():
    with Criterion(7, "end-to-end equivalence at B = 6", 60) as cr:
        for text in ("t1 - 5", "t1^2 + 1", "t1^2 - 4", "t1 + t2 - 3", "2*x^3 - 3*x^2"):
            r = check_equivalence(parse_auto(text), 6)
            cr.check(r.consistent, text)
            if text == "t1 - 5":
                cr.check(len(r.sigma_witnesses) == 4, len(r.sigma_witnesses))


def test_8_four_squares(corpus):
    with Criterion(8, "four-squares transform", 60) as cr:
        for f in corpus:
            g = four_squares_transform(f)
            cr.check(g.registry.arity == 4 * f.registry.arity, f)
            cr.check(total_degree(g) == 2 * total_degree(f), f)
        g = four_squares_transform(parse_auto("u - 3"))
        w = lagrange_four_squares(3)
        cr.check(w == (1, 1, 1, 0) and brute_eval(g, w) == 0, w)
        desc = compile_instance(parse_auto("u - 3"), mode="N")
        cr.check(brute_eval(desc.Z_equation, w + (0, 1)) == 0, "witness not in Z")
        h = four_squares_transform(parse_auto("u + 1"))
        cr.check(search_integer_zeros(h, 10) == [], "u + 1 has a zero")


def test_9_determinism():
    def compile_once():
        out, err = io.StringIO(), io.StringIO()
        assert run(["compile", "--f", "t1^2*t2 - 3*t2 + 7"], stdout=out, stderr=err) == 0
        return out.getvalue().encode()

    with Criterion(9, "compile is byte-identical across runs", 60) as cr:
        cr.check(compile_once() == compile_once(), "outputs differ")
