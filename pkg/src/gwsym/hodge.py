"""Brute-force middle Hodge pairing of Sym^n C.

H^*(C, Omega^*) of a genus-g curve has the generators

    beta_dual (p, q) = (0, 0)   the unit
    alpha_i   (1, 0)            i = 1..g
    alpha_dual_i (0, 1)
    beta      (1, 1)            trace 1

graded commutative in degree q - p.  A class on C^n is a rational
combination of tensor words (one generator per factor).  Invariants of
the signed S_n action in bidegree (m, m), n = 2m, are the middle
cohomology of Sym^n C; the cup-product/trace pairing on them, plus
hyperbolic copies to reach the topological rank, is chi(Sym^n C).
"""

from __future__ import annotations

import math
import os
from collections import deque
from functools import lru_cache
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import NamedTuple

from .closed_form import rank_formula
from .errors import (GuardExceeded, LengthMismatch, NonIntegralH, OddPower, WrongBidegree)
from .fields import QQ
from .gw import GWElement, hyperbolic
from .quadform import GramMatrix, gram_to_gw

BETA_DUAL, ALPHA, ALPHA_DUAL, BETA = 0, 1, 2, 3
_BIDEGREE = {BETA_DUAL: (0, 0), ALPHA: (1, 0), ALPHA_DUAL: (0, 1), BETA: (1, 1)}
_PARITY = {BETA_DUAL: 0, ALPHA: 1, ALPHA_DUAL: 1, BETA: 0}
_NAMES = {BETA_DUAL: "bv", ALPHA: "a", ALPHA_DUAL: "av", BETA: "b"}

DEFAULT_MAX_N = 10


def max_n() -> int:
    """Largest n the brute-force oracle accepts; GWSYM_MAX_N overrides."""
    return int(os.environ.get("GWSYM_MAX_N", DEFAULT_MAX_N))


class LocalGen(NamedTuple):
    kind: int
    index: int = 0

    @property
    def bidegree(self) -> tuple[int, int]:
        return _BIDEGREE[self.kind]

    @property
    def parity(self) -> int:
        return _PARITY[self.kind]

    def __repr__(self):
        name = _NAMES[self.kind]
        return f"{name}{self.index}" if self.kind in (ALPHA, ALPHA_DUAL) else name


BV = LocalGen(BETA_DUAL)
B = LocalGen(BETA)


def alpha(i: int) -> LocalGen:
    return LocalGen(ALPHA, i)


def alpha_dual(i: int) -> LocalGen:
    return LocalGen(ALPHA_DUAL, i)


def local_mul(x: LocalGen, y: LocalGen):
    """Product on C: (sign, generator), or None when it vanishes."""
    if x.kind == BETA_DUAL:
        return 1, y
    if y.kind == BETA_DUAL:
        return 1, x
    if x.index == y.index:
        if x.kind == ALPHA_DUAL and y.kind == ALPHA:
            return 1, B
        if x.kind == ALPHA and y.kind == ALPHA_DUAL:
            return -1, B
    return None


def word_bidegree(w) -> tuple[int, int]:
    p = q = 0
    for x in w:
        dp, dq = _BIDEGREE[x.kind]
        p += dp
        q += dq
    return p, q


def word_parity(w) -> int:
    return sum(_PARITY[x.kind] for x in w) % 2


def word_mul(w1, w2):
    """Product of tensor words on C^n: (sign, word) or None.

    Moving factor j of w2 past factors k > j of w1 costs
    (-1)^(parity(w2[j]) parity(w1[k])).
    """
    if len(w1) != len(w2):
        raise LengthMismatch(f"{len(w1)} != {len(w2)}")
    sign = 1
    odd_seen = 0
    out = []
    for x, y in zip(w1, w2):
        if _PARITY[x.kind] and odd_seen % 2:
            sign = -sign
        if _PARITY[y.kind]:
            odd_seen += 1
        r = local_mul(x, y)
        if r is None:
            return None
        sign *= r[0]
        out.append(r[1])
    return sign, tuple(out)


def sn_act(perm, w):
    """sigma . w where perm[j] = sigma(j): factor j of w moves to slot sigma(j).

    The sign counts inversions of sigma between odd factors.
    """
    n = len(w)
    out = [None] * n
    odd = []
    for j in range(n):
        out[perm[j]] = w[j]
        if _PARITY[w[j].kind]:
            odd.append(perm[j])
    inv = 0
    for a in range(len(odd)):
        pa = odd[a]
        for b in range(a + 1, len(odd)):
            if pa > odd[b]:
                inv += 1
    return (-1 if inv % 2 else 1), tuple(out)


def compose(sigma, tau):
    """(sigma tau)(j) = sigma(tau(j))."""
    return tuple(sigma[t] for t in tau)


def dual_word(w):
    """The unique word whose product with w is +-beta^(x)n."""
    out = []
    for x in w:
        if x.kind == BETA_DUAL:
            out.append(B)
        elif x.kind == BETA:
            out.append(BV)
        elif x.kind == ALPHA:
            out.append(LocalGen(ALPHA_DUAL, x.index))
        else:
            out.append(LocalGen(ALPHA, x.index))
    return tuple(out)


class CohClass:
    """Homogeneous rational combination of tensor words of length n."""

    __slots__ = ("n", "terms", "bidegree", "label", "_dual")

    def __init__(self, n: int, terms=None, label=None):
        self.n = n
        self.label = label
        self._dual = None
        clean = {}
        bideg = None
        for w, c in (terms or {}).items():
            if not c:
                continue
            if len(w) != n:
                raise LengthMismatch(f"word of length {len(w)} in a class on C^{n}")
            b = word_bidegree(w)
            if bideg is None:
                bideg = b
            elif b != bideg:
                raise WrongBidegree(f"mixed bidegrees {bideg} and {b}")
            clean[w] = c
        self.terms = clean
        self.bidegree = bideg

    @classmethod
    def of_word(cls, w, coeff=1) -> CohClass:
        return cls(len(w), {tuple(w): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, CohClass) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: CohClass) -> CohClass:
        if self.n != other.n:
            raise LengthMismatch(f"{self.n} != {other.n}")
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return CohClass(self.n, acc)

    def __neg__(self):
        return CohClass(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return CohClass(self.n, {w: k * c for w, c in self.terms.items()})

    @property
    def parity(self) -> int:
        if self.bidegree is None:
            return 0
        p, q = self.bidegree
        return (q - p) % 2

    def act(self, perm) -> CohClass:
        acc = {}
        for w, c in self.terms.items():
            s, v = sn_act(perm, w)
            acc[v] = acc.get(v, 0) + s * c
        return CohClass(self.n, acc)

    def dual_index(self) -> dict:
        if self._dual is None:
            self._dual = {dual_word(w): (w, c) for w, c in self.terms.items()}
        return self._dual

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{c}*{'(x)'.join(map(repr, w))}" for w, c in list(self.terms.items())[:4]]
        more = " + ..." if len(self.terms) > 4 else ""
        return " + ".join(parts) + more


def top_word(n: int):
    return (B,) * n


def cup(x: CohClass, y: CohClass) -> CohClass:
    """Bilinear extension of word_mul."""
    if x.n != y.n:
        raise LengthMismatch(f"{x.n} != {y.n}")
    n = x.n
    if not x or not y:
        return CohClass(n)
    (p1, q1), (p2, q2) = x.bidegree, y.bidegree
    if (p1 + p2, q1 + q2) == (n, n):
        # landing in the top bidegree, only w1 * dual(w1) can survive
        idx = x.dual_index()
        total = 0
        for w2 in idx.keys() & y.terms.keys():
            w1, c1 = idx[w2]
            r = word_mul(w1, w2)
            if r is not None:
                total += r[0] * c1 * y.terms[w2]
        return CohClass(n, {top_word(n): total})
    acc = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            r = word_mul(w1, w2)
            if r is not None:
                acc[r[1]] = acc.get(r[1], 0) + r[0] * c1 * c2
    return CohClass(n, acc)


def trace_sym(x: CohClass) -> Fraction:
    """Trace on H^n(Sym^n C, Omega^n): Tr(beta^(x)n) = 1/n!."""
    if not x:
        return Fraction(0)
    if x.bidegree != (x.n, x.n):
        raise WrongBidegree(f"trace needs bidegree {(x.n, x.n)}, got {x.bidegree}")
    return Fraction(x.terms.get(top_word(x.n), 0), math.factorial(x.n))


# -- the invariant basis --------------------------------------------------------

def _check_n(n: int):
    if n % 2:
        raise OddPower(f"middle cohomology needs even n, got {n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_n():
        raise GuardExceeded(f"n = {n} exceeds the oracle guard {max_n()} (GWSYM_MAX_N)")


def index_pairs(g: int, m: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Same-size strictly increasing (I, J) in {1..g}, |I| <= m, ordered by (|I|, I, J)."""
    out = []
    for nu in range(min(g, m) + 1):
        subsets = list(combinations(range(1, g + 1), nu))
        out.extend((I, J) for I in subsets for J in subsets)
    return out


def standard_word(I, J, m: int):
    """a_IJ = alpha_I on slots 1..nu, alpha_dual_J next, then m-nu betas, then units."""
    nu = len(I)
    return (tuple(alpha(i) for i in I) + tuple(alpha_dual(j) for j in J)
            + (B,) * (m - nu) + (BV,) * (m - nu))


def symmetrize(w) -> CohClass:
    """sum over sigma in S_n of sigma . w, with accumulated integer coefficients."""
    acc = {}
    for perm in permutations(range(len(w))):
        s, v = sn_act(perm, w)
        acc[v] = acc.get(v, 0) + s
    return CohClass(len(w), acc)


def middle_words(g: int, n: int):
    """All tensor words of length n and bidegree (m, m)."""
    m = n // 2
    for kinds in product((BETA_DUAL, ALPHA, ALPHA_DUAL, BETA), repeat=n):
        p = sum(_BIDEGREE[k][0] for k in kinds)
        q = sum(_BIDEGREE[k][1] for k in kinds)
        if (p, q) != (m, m):
            continue
        slots = [i for i, k in enumerate(kinds) if k in (ALPHA, ALPHA_DUAL)]
        for idx in product(range(1, g + 1), repeat=len(slots)):
            w = [LocalGen(k) for k in kinds]
            for s, i in zip(slots, idx):
                w[s] = LocalGen(kinds[s], i)
            yield tuple(w)


def fixed_point_basis(g: int, n: int) -> list[CohClass]:
    """Basis of the S_n-fixed subspace of bidegree (m, m), by linear algebra.

    Solves v = s . v for the adjacent transpositions s, one orbit at a time:
    coordinates propagate along the orbit, and an orbit on which some word
    is forced to equal its own negative supports no fixed vector.
    """
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    seen = set()
    out = []
    for w0 in middle_words(g, n):
        if w0 in seen:
            continue
        coeff = {w0: 1}
        consistent = True
        queue = deque([w0])
        seen.add(w0)
        while queue:
            w = queue.popleft()
            for s in gens:
                sg, v = sn_act(s, w)
                c = sg * coeff[w]
                if v in coeff:
                    if coeff[v] != c:
                        consistent = False
                else:
                    coeff[v] = c
                    seen.add(v)
                    queue.append(v)
        if consistent:
            out.append(CohClass(n, coeff))
    return out


def span_rank(vectors) -> int:
    """Rank over Q of sparse vectors given as CohClass or dict."""
    pivots: dict = {}
    rank = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in (vec.terms if isinstance(vec, CohClass) else vec).items()}
        while v:
            lead = min(v)
            if lead not in pivots:
                pivots[lead] = v
                rank += 1
                break
            pv = pivots[lead]
            f = v[lead] / pv[lead]
            for k, c in pv.items():
                nv = v.get(k, 0) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return rank


@lru_cache(maxsize=None)
def _basis(g: int, n: int) -> tuple[CohClass, ...]:
    m = n // 2
    out = []
    for I, J in index_pairs(g, m):
        a = symmetrize(standard_word(I, J, m))
        a.label = (I, J)
        out.append(a)
    return tuple(out)


@lru_cache(maxsize=None)
def check_invariant_basis(g: int, n: int) -> int:
    """Dimension of the invariant space, after asserting both constructions agree."""
    _check_n(n)
    basis = _basis(g, n)
    fixed = fixed_point_basis(g, n)
    r_orbit, r_fixed = span_rank(basis), span_rank(fixed)
    r_both = span_rank(list(basis) + fixed)
    if not (r_orbit == len(basis) == r_fixed == len(fixed) == r_both):
        raise AssertionError(
            f"invariant spans disagree for g={g}, n={n}: orbit rank {r_orbit}/{len(basis)}, "
            f"fixed-point rank {r_fixed}/{len(fixed)}, joint {r_both}")
    return r_both


def invariant_basis(g: int, n: int, check: bool = True) -> list[CohClass]:
    """alpha_IJ = sum_sigma sigma . a_IJ over the index pairs, in index_pairs order."""
    _check_n(n)
    if check:
        check_invariant_basis(g, n)
    return list(_basis(g, n))


def admissible_count(I, J, m: int) -> int:
    """#{sigma in S_n : a_IJ . sigma a_JI != 0}, by enumeration."""
    a, b = standard_word(I, J, m), standard_word(J, I, m)
    return sum(1 for perm in permutations(range(2 * m))
               if word_mul(a, sn_act(perm, b)[1]) is not None)


@lru_cache(maxsize=None)
def gram_middle(g: int, n: int) -> GramMatrix:
    """Gram matrix of (x, y) -> Tr(x y) on the invariant basis."""
    basis = invariant_basis(g, n)
    rows = tuple(tuple(trace_sym(cup(x, y)) for y in basis) for x in basis)
    return GramMatrix(QQ, rows)


def chi_sym_oracle(g: int, n: int) -> GWElement:
    """Middle pairing form plus l H, with l fixed by the rank (-1)^n binom(2g-2, n)."""
    if n < 2:
        raise ValueError("the oracle needs n >= 2")
    _check_n(n)
    q = gram_to_gw(gram_middle(g, n))
    diff = rank_formula(g, n) - q.rank
    if diff % 2:
        raise NonIntegralH(f"rank gap {diff} is odd for g={g}, n={n}")
    return q + hyperbolic(diff // 2, QQ)
