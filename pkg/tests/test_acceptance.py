"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import math
import random
import sys
from fractions import Fraction

import pytest
from sympy import Poly, Symbol

from gwsym import (INF, QQ, EtaleAlgebra, FunctionField, a_n, a_n_neg_lH, a_n_neg_lH_poly,
                   admissible_count, binom_gen, check_invariant_basis, chi_curve, chi_sym_closed,
                   chi_sym_oracle, gen, gram_middle, hilbert_symbol, hyperbolic, invariant_basis,
                   is_equal, mul, specialize_t, square_class, trace_form)
from gwsym.gw import GWElement

GENERA = range(5)
EVEN_N = (2, 4, 6)

# collected for the terminal summary (see conftest.py)
LINES = []


def report(number, title, ok, detail=""):
    line = f"criterion {number} {title}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    LINES.append(line)
    print(line)
    return ok


def criterion_1():
    bad = [(g, n) for g in GENERA for n in EVEN_N
           if not is_equal(chi_sym_oracle(g, n), chi_sym_closed(g, n))]
    return report(1, "oracle equals closed form", not bad, f"{len(bad)} mismatches of 15")


def criterion_2():
    bad = []
    for g in GENERA:
        for n in EVEN_N:
            m = n // 2
            G = gram_middle(g, n)
            labels = [b.label for b in invariant_basis(g, n)]
            for i, (I, J) in enumerate(labels):
                nu = len(I)
                target = (-1) ** nu * math.factorial(m - nu) ** 2
                for j, (K, L) in enumerate(labels):
                    want = target if (K, L) == (J, I) else 0
                    if G.entries[i][j] != want:
                        bad.append((g, n, I, J, K, L))
                if admissible_count(I, J, m) != math.factorial(m - nu) ** 2:
                    bad.append((g, n, I, J, "count"))
    return report(2, "middle Gram block shape and admissible counts", not bad,
                  f"{len(bad)} bad entries")


def criterion_3():
    bad = []
    for g in range(11):
        for n in range(13):
            x = chi_sym_closed(g, n)
            if x.rank != (-1) ** n * binom_gen(2 * g - 2, n):
                bad.append(("rank", g, n))
            if g >= 1 and n > 2 * g - 2 and x:
                bad.append(("vanish", g, n))
    return report(3, "rank law and vanishing", not bad, f"{len(bad)} failures")


def criterion_4():
    bad = []
    for l in range(1, 9):
        series_vals = [a_n(-hyperbolic(l), n) for n in range(11)]
        for n in range(11):
            a, b, c = a_n_neg_lH(l, n), a_n_neg_lH_poly(l, n), series_vals[n]
            if not (is_equal(a, b) and is_equal(b, c) and is_equal(a, c)):
                bad.append((l, n))
            if a.rank != (-1) ** n * math.comb(2 * l, n):
                bad.append(("rank", l, n))
    return report(4, "a_n(-lH) three ways", not bad, f"{len(bad)} failures")


def criterion_5():
    bad = [(g, n) for g in range(7) for n in range(9)
           if not is_equal(a_n(chi_curve(g), n), chi_sym_closed(g, n))]
    return report(5, "power structure on the curve class", not bad, f"{len(bad)} mismatches")


def _primes_of(*vals):
    out = set()
    for v in vals:
        for n in (abs(Fraction(v).numerator), Fraction(v).denominator):
            p = 2
            while p * p <= n:
                while n % p == 0:
                    out.add(p)
                    n //= p
                p += 1
            if n > 1:
                out.add(n)
    return out


def criterion_6():
    rng = random.Random(20261014)
    bad = []
    witt = 0
    while witt < 100:
        a, b = rng.randint(-500, 500), rng.randint(-500, 500)
        if a == 0 or b == 0 or a + b == 0:
            continue
        witt += 1
        if not is_equal(gen(a) + gen(b), gen(a + b) + gen(a * b * (a + b))):
            bad.append(("witt", a, b))
    for _ in range(100):
        a = rng.choice([1, -1]) * rng.randint(1, 10 ** 4)
        if not is_equal(gen(a) + gen(-a), hyperbolic()):
            bad.append(("hyperbolic", a))
        if not is_equal(mul(gen(a), gen(a)), gen(1)):
            bad.append(("square", a))
        b = rng.choice([1, -1]) * rng.randint(1, 10 ** 4)
        prod = hilbert_symbol(a, b, INF)
        for p in _primes_of(a, b) | {2}:
            prod *= hilbert_symbol(a, b, p)
        if prod != 1:
            bad.append(("reciprocity", a, b))
    return report(6, "GW axioms and Hilbert reciprocity", not bad, f"{len(bad)} failures")


def criterion_7():
    K = FunctionField(QQ)
    rng = random.Random(7)
    bad = []
    for _ in range(50):
        u0 = rng.choice([1, -1]) * rng.randint(1, 40)
        unit = [u0] + [rng.randint(-9, 9) for _ in range(rng.randint(0, 3))]
        nu = rng.randint(0, 5)
        cls = square_class(([0] * nu + unit, [1]), K)
        if specialize_t(GWElement(K, [(cls, 1)])) != gen(u0):
            bad.append(("value", unit, nu))
    for _ in range(50):
        xs = [square_class(([0] * rng.randint(0, 3) + [rng.randint(1, 20) * rng.choice([1, -1]),
                                                       rng.randint(-5, 5)], [1]), K)
              for _ in range(2)]
        x, y = GWElement(K, [(xs[0], 1)]), GWElement(K, [(xs[1], 1)])
        if not is_equal(specialize_t(x * y), specialize_t(x) * specialize_t(y)):
            bad.append(("mult", xs))
    for g in range(5):
        for n in range(9):
            if specialize_t(chi_sym_closed(g, n, K)) != chi_sym_closed(g, n, QQ):
                bad.append(("closed", g, n))
    return report(7, "specialization at t = 0", not bad, f"{len(bad)} failures")


def criterion_8():
    x = Symbol("x")
    bad = []
    for c in range(-5, 6):
        if trace_form(EtaleAlgebra(((-c, 1),))) != gen(1):
            bad.append(("linear", c))
    if not is_equal(trace_form(EtaleAlgebra(((-2, 0, 1),))), gen(1) + gen(2)):
        bad.append("x^2-2")
    if not is_equal(trace_form(EtaleAlgebra(((1, 0, 1),))), hyperbolic()):
        bad.append("x^2+1")
    rng = random.Random(8)
    done = 0
    while done < 50:
        d = rng.randint(1, 5)
        f = tuple([rng.randint(-6, 6) for _ in range(d)] + [1])
        P = Poly(list(reversed(f)), x)
        if P.gcd(P.diff(x)).degree() > 0:
            continue
        done += 1
        if trace_form(EtaleAlgebra((f,))).rank != d:
            bad.append(("rank", f))
    return report(8, "trace forms", not bad, f"{len(bad)} failures")


def criterion_9():
    bad = []
    for g in GENERA:
        for n in EVEN_N:
            m = n // 2
            want = sum(math.comb(g, v) ** 2 for v in range(m + 1))
            try:
                dim = check_invariant_basis(g, n)
            except AssertionError:
                dim = None
            if dim != want:
                bad.append((g, n, dim, want))
    return report(9, "invariant space dimension, orbit sums vs fixed points", not bad,
                  f"{len(bad)} mismatches")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[c.__name__ for c in CRITERIA])
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
