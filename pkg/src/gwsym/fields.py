"""Field descriptors and canonical square classes.

Supported fields: the rationals, the reals, prime fields of odd
characteristic, and rational function fields F(t) over one of those.
A square class is stored through a canonical representative so that
structural equality of classes is equality in F^x / (F^x)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational, Real

from .errors import (BadUnitPart, FieldMismatch, UnreducibleClass, UnsupportedField,
                     ZeroElement)

TRIAL_DIVISION_BOUND = 10**6

RATIONALS = "Q"
REALS = "R"
PRIME_FIELD = "F"
FUNCTION_FIELD = "F(t)"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if n % d == 0:
            return n == d
    if n < 169:
        return True
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldDesc:
    kind: str
    p: int | None = None
    base: FieldDesc | None = None
    var: str = "t"

    def __post_init__(self):
        if self.kind == PRIME_FIELD:
            if self.p is None or self.p == 2 or not _is_prime(self.p):
                raise ValueError(f"prime field needs an odd prime, got {self.p!r}")
        elif self.kind == FUNCTION_FIELD:
            if self.base is None:
                raise ValueError("function field needs a base field")
            if self.base.kind == FUNCTION_FIELD:
                raise ValueError("function fields may not be nested")
        elif self.kind not in (RATIONALS, REALS):
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_function_field(self) -> bool:
        return self.kind == FUNCTION_FIELD

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"F{self.p}"
        if self.kind == FUNCTION_FIELD:
            return f"{self.base}({self.var})"
        return self.kind


QQ = FieldDesc(RATIONALS)
RR = FieldDesc(REALS)


def GF(p: int) -> FieldDesc:
    return FieldDesc(PRIME_FIELD, p=p)


def FunctionField(base: FieldDesc, var: str = "t") -> FieldDesc:
    return FieldDesc(FUNCTION_FIELD, base=base, var=var)


def parse_field(text: str) -> FieldDesc:
    """Parse ``Q``, ``R``, ``F7`` / ``GF7``, or any of those followed by ``(t)``."""
    s = text.strip()
    if s.endswith(")") and "(" in s:
        head, var = s[:-1].split("(", 1)
        return FunctionField(parse_field(head), var.strip() or "t")
    if s in ("Q", "QQ"):
        return QQ
    if s in ("R", "RR"):
        return RR
    for prefix in ("GF", "F"):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return GF(int(s[len(prefix):]))
    raise ValueError(f"unrecognised field {text!r}")


@lru_cache(maxsize=4096)
def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer.

    Trial division runs up to TRIAL_DIVISION_BOUND; a leftover cofactor is
    accepted only when it is provably prime or a perfect square.
    """
    if n == 0:
        raise ZeroElement("0 has no square class")
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n and d <= TRIAL_DIVISION_BOUND:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d > n or _is_prime(n):
            out *= n
        else:
            r = math.isqrt(n)
            if r * r != n:
                raise UnreducibleClass(
                    f"cofactor {n} exceeds the trial-division bound {TRIAL_DIVISION_BOUND}")
    return sign * out


@lru_cache(maxsize=None)
def least_nonresidue(p: int) -> int:
    for a in range(2, p):
        if pow(a, (p - 1) // 2, p) == p - 1:
            return a
    raise AssertionError("unreachable for odd primes")


def to_fraction(a) -> Fraction:
    if isinstance(a, Fraction):
        return a
    if isinstance(a, Rational):
        return Fraction(int(a.numerator), int(a.denominator))
    if isinstance(a, str):
        return Fraction(a)
    raise TypeError(f"expected a rational number, got {type(a).__name__}")


def to_prime_field(a, p: int) -> int:
    a = to_fraction(a)
    if a.denominator % p == 0:
        raise ValueError(f"{a} is not defined in F{p}")
    return a.numerator * pow(a.denominator, -1, p) % p


class SquareClass:
    """A nonzero field element modulo squares, held by its canonical representative.

    ``value`` is a squarefree int over Q, +-1 over R, 1 or the least
    non-residue over F_p, and a triple ``(c, nu, unit)`` over F(t) meaning
    ``c * t**nu * unit(t)``: ``c`` a base SquareClass, ``nu`` in {0, 1},
    ``unit`` the coefficient tuple (constant term first) of a squarefree
    polynomial with ``unit(0) == 1``.
    """

    __slots__ = ("field", "value", "_key")

    def __init__(self, field: FieldDesc, value):
        self.field = field
        self.value = value
        self._key = None

    def __eq__(self, other):
        return (isinstance(other, SquareClass) and self.field == other.field
                and self.value == other.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def sort_key(self):
        if self._key is None:
            v = self.value
            if self.field.is_function_field:
                c, nu, unit = v
                self._key = (nu, len(unit), unit, c.sort_key())
            else:
                self._key = (v < 0, abs(v))
        return self._key

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: SquareClass) -> SquareClass:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if not self.field.is_function_field:
            return square_class(self.value * other.value, self.field)
        from .funcfield import multiply_classes
        return multiply_classes(self, other)

    @property
    def is_one(self) -> bool:
        if self.field.is_function_field:
            c, nu, unit = self.value
            return c.is_one and nu == 0 and unit == (unit[0],)
        return self.value == 1

    @property
    def sign(self) -> int | None:
        """Sign of the representative over Q or R, else None."""
        if self.field.kind in (RATIONALS, REALS):
            return 1 if self.value > 0 else -1
        return None

    def __str__(self):
        if self.field.is_function_field:
            from .funcfield import format_class
            return format_class(self)
        return str(self.value)

    def __repr__(self):
        return f"SquareClass({self.field}, {self})"


def square_class(a, field: FieldDesc) -> SquareClass:
    """Square-class reduction of a nonzero element of ``field``.

    Function-field elements are given as a base-field constant or as a
    pair ``(num, den)`` of coefficient sequences, constant term first.
    """
    kind = field.kind
    if kind == RATIONALS:
        q = to_fraction(a)
        if q == 0:
            raise ZeroElement("<0> is not a generator")
        return SquareClass(field, squarefree_part(q.numerator * q.denominator))
    if kind == REALS:
        if not isinstance(a, Real):
            raise TypeError(f"expected a real number, got {type(a).__name__}")
        if a == 0:
            raise ZeroElement("<0> is not a generator")
        return SquareClass(field, 1 if a > 0 else -1)
    if kind == PRIME_FIELD:
        p = field.p
        r = to_prime_field(a, p)
        if r == 0:
            raise ZeroElement(f"<0> is not a generator of GW(F{p})")
        if pow(r, (p - 1) // 2, p) == 1:
            return SquareClass(field, 1)
        return SquareClass(field, least_nonresidue(p))
    if kind == FUNCTION_FIELD:
        from .funcfield import class_of
        return class_of(a, field)
    raise UnsupportedField(str(field))


def function_class(c, nu: int, unit, field: FieldDesc, unit_den=(1,)) -> SquareClass:
    """The class of ``c * t**nu * u(t)`` where ``u = unit / unit_den`` is a t-adic unit.

    Both polynomials are coefficient sequences, constant term first.
    BadUnitPart is raised when ``u(0)`` is zero or undefined.
    """
    if not field.is_function_field:
        raise UnsupportedField(f"{field} is not a function field")
    num = [to_fraction(x) for x in unit]
    den = [to_fraction(x) for x in unit_den]
    if not num or num[0] == 0 or not den or den[0] == 0:
        raise BadUnitPart("unit part must be defined and nonzero at t = 0")
    c = to_fraction(c)
    if c == 0:
        raise ZeroElement("constant factor must be nonzero")
    zeros = [Fraction(0)] * abs(nu)
    num = [c * x for x in num]
    if nu >= 0:
        num = zeros + num
    else:
        den = zeros + den
    return square_class((num, den), field)
