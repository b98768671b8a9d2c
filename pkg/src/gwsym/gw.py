"""Exact arithmetic in the Grothendieck-Witt ring GW(F).

Elements are virtual forms: integer combinations of rank-one forms <a>,
stored as a map from canonical square classes to nonzero multiplicities.
``==`` compares that presentation; genuine equality in GW is
:func:`is_equal`, which is decidable over Q, R and F_p.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .errors import FieldMismatch, UnsupportedField
from .fields import (PRIME_FIELD, QQ, RATIONALS, REALS, FieldDesc, SquareClass, parse_field,
                     square_class, to_fraction)

INF = math.inf

GW_JSON_SCHEMA = {
    "type": "object",
    "required": ["field", "terms"],
    "properties": {
        "field": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["class", "mult"],
                "properties": {
                    "class": {"type": ["integer", "string"]},
                    "mult": {"type": "integer"},
                },
            },
        },
    },
}


class GWElement:
    __slots__ = ("field", "_terms")

    def __init__(self, field: FieldDesc, terms=()):
        acc: dict[SquareClass, int] = defaultdict(int)
        items = terms.items() if isinstance(terms, dict) else terms
        for cls, mult in items:
            if cls.field != field:
                raise FieldMismatch(f"class over {cls.field} in element over {field}")
            acc[cls] += int(mult)
        self.field = field
        self._terms = {c: acc[c] for c in sorted(acc) if acc[c]}

    @classmethod
    def zero(cls, field: FieldDesc = QQ) -> GWElement:
        return cls(field)

    @classmethod
    def one(cls, field: FieldDesc = QQ) -> GWElement:
        return gen(1, field)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def rank(self) -> int:
        return sum(self._terms.values())

    def _check(self, other: GWElement):
        if not isinstance(other, GWElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if self._check(other) is NotImplemented:
            return NotImplemented
        return GWElement(self.field, list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return GWElement(self.field, [(c, -m) for c, m in self._terms.items()])

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GWElement(self.field, [(c, m * other) for c, m in self._terms.items()])
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = []
        for c1, m1 in self._terms.items():
            for c2, m2 in other._terms.items():
                out.append((c1 * c2, m1 * m2))
        return GWElement(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("GW elements are not invertible in general")
        out = GWElement.one(self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, GWElement) and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.field, tuple(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def positive_part(self) -> GWElement:
        return GWElement(self.field, [(c, m) for c, m in self._terms.items() if m > 0])

    def negative_part(self) -> GWElement:
        """The genuine form x_- with x = x_+ - x_-."""
        return GWElement(self.field, [(c, -m) for c, m in self._terms.items() if m < 0])

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"GWElement({self.field}, {render(self)!r})"


def gen(a, field: FieldDesc = QQ) -> GWElement:
    """The rank-one form <a>: x -> a x^2."""
    return GWElement(field, [(square_class(a, field), 1)])


def hyperbolic(l: int = 1, field: FieldDesc = QQ) -> GWElement:
    """l * H with H = <1> + <-1>."""
    return GWElement(field, [(square_class(1, field), l), (square_class(-1, field), l)])


def add(x: GWElement, y: GWElement) -> GWElement:
    return x + y


def neg(x: GWElement) -> GWElement:
    return -x


def mul(x: GWElement, y: GWElement) -> GWElement:
    return x * y


# -- local invariants over Q ------------------------------------------------

def _valuation(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    return 1 if pow(u % p, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """The Hilbert symbol (a, b) at a prime p or at INF, for nonzero rationals."""
    a, b = to_fraction(a), to_fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == INF or place == "inf":
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    # clearing denominators multiplies by squares
    A = a.numerator * a.denominator
    B = b.numerator * b.denominator
    alpha, u = _valuation(A, p)
    beta, v = _valuation(B, p)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omega = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(v, p)
    return s


def _prime_divisors(n: int) -> set[int]:
    n = abs(n)
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def relevant_primes(*elements: GWElement) -> list:
    """2, INF, and every prime dividing a class representative."""
    ps = {2}
    for x in elements:
        for c in x.terms:
            ps |= _prime_divisors(c.value)
    return sorted(ps) + [INF]


def _genuine_hasse(x: GWElement, place) -> int:
    # prod_{i<j} (a_i, a_j) grouped by class: (c, d)^(m_c m_d) and (c, c)^C(m_c, 2)
    items = list(x.terms.items())
    h = 1
    for i, (c, m) in enumerate(items):
        if (m * (m - 1) // 2) % 2:
            h *= hilbert_symbol(c.value, c.value, place)
        for d, k in items[i + 1:]:
            if (m * k) % 2:
                h *= hilbert_symbol(c.value, d.value, place)
    return h


def _disc_value(x: GWElement) -> int:
    d = 1
    for c, m in x.terms.items():
        if m % 2:
            d *= c.value
    return d


@dataclass(frozen=True)
class GWInvariants:
    rank: int
    signature: int | None
    discriminant: SquareClass
    hasse: dict | None = None


def discriminant(x: GWElement) -> SquareClass:
    """Product of classes raised to multiplicities (signs of multiplicities are irrelevant)."""
    if x.field.is_function_field:
        out = square_class(1, x.field)
        for c, m in x.terms.items():
            if m % 2:
                out = out * c
        return out
    return square_class(_disc_value(x), x.field)


def signature(x: GWElement) -> int:
    if x.field.kind not in (RATIONALS, REALS):
        raise UnsupportedField(f"signature is not defined over {x.field}")
    return sum(m * c.sign for c, m in x.terms.items())


def hasse_invariant(x: GWElement, place) -> int:
    """Hasse invariant of a virtual form over Q.

    For a genuine form this is the product of pairwise Hilbert symbols of
    a diagonalization.  For x = x_+ - x_- it is the degree-two part of the
    total Stiefel-Whitney class w(x_+) w(x_-)^{-1}, an invariant of the
    class of x in GW(Q).
    """
    if x.field.kind != RATIONALS:
        raise UnsupportedField(f"Hasse invariants are only implemented over Q, not {x.field}")
    pos, negp = x.positive_part(), x.negative_part()
    h = _genuine_hasse(pos, place) * _genuine_hasse(negp, place)
    if negp:
        dm = _disc_value(negp)
        h *= hilbert_symbol(dm, dm, place) * hilbert_symbol(_disc_value(pos), dm, place)
    return h


def invariants(x: GWElement) -> GWInvariants:
    F = x.field
    if F.is_function_field:
        raise UnsupportedField(f"invariants are not computed over {F}")
    sig = signature(x) if F.kind in (RATIONALS, REALS) else None
    hasse = None
    if F.kind == RATIONALS:
        hasse = {p: hasse_invariant(x, p) for p in relevant_primes(x)}
    return GWInvariants(x.rank, sig, discriminant(x), hasse)


def is_equal(x: GWElement, y: GWElement) -> bool:
    """Equality in GW(F) for F = Q, R or F_p."""
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")
    F = x.field
    if F.is_function_field:
        raise UnsupportedField(f"equality is not decidable here over {F}")
    if x.rank != y.rank:
        return False
    if F.kind == REALS:
        return signature(x) == signature(y)
    if F.kind == PRIME_FIELD:
        return discriminant(x) == discriminant(y)
    # Witt cancellation: x = y iff x_+ + y_- and y_+ + x_- are isometric
    lhs = x.positive_part() + y.negative_part()
    rhs = y.positive_part() + x.negative_part()
    if signature(lhs) != signature(rhs) or discriminant(lhs) != discriminant(rhs):
        return False
    return all(_genuine_hasse(lhs, p) == _genuine_hasse(rhs, p)
               for p in relevant_primes(lhs, rhs))


def specialize_t(x: GWElement) -> GWElement:
    """The specialization GW(F(t)) -> GW(F) for the uniformizer t."""
    if not x.field.is_function_field:
        raise UnsupportedField(f"{x.field} is not a function field")
    from .funcfield import specialize_class
    return GWElement(x.field.base, [(specialize_class(c), m) for c, m in x.terms.items()])


def as_pm_counts(x: GWElement) -> tuple[int, int] | None:
    """(mult of <1>, mult of <-1>) when x only involves those classes."""
    one, minus = square_class(1, x.field), square_class(-1, x.field)
    if any(c not in (one, minus) for c in x.terms):
        return None
    return x.terms.get(one, 0), x.terms.get(minus, 0)


def pm(plus: int, minus: int, field: FieldDesc = QQ) -> GWElement:
    return GWElement(field, [(square_class(1, field), plus), (square_class(-1, field), minus)])


def normalize(x: GWElement) -> GWElement:
    """A GW-equal presentation that is as short as the field allows.

    Over R and F_p the result is canonical.  Over Q the element is rewritten
    as a<1> + b<-1> whenever it equals such a combination; otherwise it is
    returned unchanged.
    """
    F = x.field
    if F.is_function_field or as_pm_counts(x) is not None:
        return x
    r = x.rank
    if F.kind == PRIME_FIELD:
        d = discriminant(x)
        return GWElement(F, [(square_class(1, F), r - 1), (d, 1)])
    s = signature(x)
    if (r + s) % 2:
        return x
    cand = pm((r + s) // 2, (r - s) // 2, F)
    if F.kind == REALS or is_equal(cand, x):
        return cand
    return x


# -- serialization ------------------------------------------------------------

def render(x: GWElement) -> str:
    """Text form ``3<1> - 2<-1> + <2>``; the zero element renders as ``0``."""
    if not x.terms:
        return "0"
    out = []
    for i, (c, m) in enumerate(x.terms.items()):
        body = f"<{c}>" if abs(m) == 1 else f"{abs(m)}<{c}>"
        if i == 0:
            out.append(("-" if m < 0 else "") + body)
        else:
            out.append(("- " if m < 0 else "+ ") + body)
    return " ".join(out)


def to_json(x: GWElement) -> dict:
    def cls(c):
        return c.value if isinstance(c.value, int) else str(c)
    return {"field": str(x.field),
            "terms": [{"class": cls(c), "mult": m} for c, m in x.terms.items()]}


def from_json(obj: dict) -> GWElement:
    F = parse_field(obj["field"])
    if F.is_function_field:
        from .parse import parse_class
        return GWElement(F, [(parse_class(str(t["class"]), F), t["mult"]) for t in obj["terms"]])
    return GWElement(F, [(square_class(Fraction(t["class"]), F), t["mult"])
                         for t in obj["terms"]])
