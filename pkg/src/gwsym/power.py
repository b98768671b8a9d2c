"""The power structure on GW(k) of a field of characteristic zero.

a_t(x) = sum_n a_n(x) t^n is multiplicative in x, so it is fixed by its
value on generators,

    a_n(<a>) = <a^n> + n(n-1)/2 (<a> + <2> - <1> - <2a>),

and on negatives, a_t(-x) = a_t(x)^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadConstantTerm, FieldMismatch
from .fields import QQ, FieldDesc, SquareClass, square_class
from .gw import GWElement, gen, hyperbolic


@dataclass(frozen=True)
class GWPowerSeries:
    """Power series sum_k coeffs[k] t^k, exact through t^order."""

    field: FieldDesc
    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> GWElement:
        return self.coeffs[k]

    def __mul__(self, other: GWPowerSeries) -> GWPowerSeries:
        return series_mul(self, other)

    @classmethod
    def unit(cls, order: int, field: FieldDesc = QQ) -> GWPowerSeries:
        z = GWElement.zero(field)
        return cls(field, (GWElement.one(field),) + (z,) * order)

    @classmethod
    def from_coeffs(cls, coeffs, order: int, field: FieldDesc = QQ) -> GWPowerSeries:
        """Truncate or zero-pad a coefficient list to the given order."""
        cs = list(coeffs)[: order + 1]
        cs += [GWElement.zero(field)] * (order + 1 - len(cs))
        for c in cs:
            if c.field != field:
                raise FieldMismatch(f"{c.field} vs {field}")
        return cls(field, tuple(cs))


def series_mul(f: GWPowerSeries, g: GWPowerSeries) -> GWPowerSeries:
    """Cauchy product, truncated to the smaller order."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    N = min(f.order, g.order)
    out = []
    for n in range(N + 1):
        acc = GWElement.zero(f.field)
        for i in range(n + 1):
            if f.coeffs[i] and g.coeffs[n - i]:
                acc = acc + f.coeffs[i] * g.coeffs[n - i]
        out.append(acc)
    return GWPowerSeries(f.field, tuple(out))


def series_inverse(f: GWPowerSeries) -> GWPowerSeries:
    """Inverse of a series with constant term <1>: c_n = -sum_{i=1}^n f_i c_{n-i}."""
    one = GWElement.one(f.field)
    if f.coeffs[0] != one:
        raise BadConstantTerm(f"constant term must be <1>, got {f.coeffs[0]}")
    c = [one]
    for n in range(1, f.order + 1):
        acc = GWElement.zero(f.field)
        for i in range(1, n + 1):
            if f.coeffs[i] and c[n - i]:
                acc = acc + f.coeffs[i] * c[n - i]
        c.append(-acc)
    return GWPowerSeries(f.field, tuple(c))


def series_pow(f: GWPowerSeries, k: int) -> GWPowerSeries:
    if k < 0:
        return series_pow(series_inverse(f), -k)
    out = GWPowerSeries.unit(f.order, f.field)
    base = f
    while k:
        if k & 1:
            out = series_mul(out, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return out


def a_n_gen(a: SquareClass, n: int) -> GWElement:
    """a_n(<a>) = <a^n> + n(n-1)/2 (<a> + <2> - <1> - <2a>)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    F = a.field
    one = square_class(1, F)
    two = square_class(2, F)
    a_pow = one if n % 2 == 0 else a
    k = n * (n - 1) // 2
    return GWElement(F, [(a_pow, 1), (a, k), (two, k), (one, -k), (two * a, -k)])


def generator_series(a: SquareClass, order: int) -> GWPowerSeries:
    return GWPowerSeries(a.field, tuple(a_n_gen(a, k) for k in range(order + 1)))


def a_series(x: GWElement, order: int) -> GWPowerSeries:
    """a_t(x) through t^order: product over terms of a_t(<a>)^{mult}."""
    out = GWPowerSeries.unit(order, x.field)
    for cls, mult in x.terms.items():
        out = series_mul(out, series_pow(generator_series(cls, order), mult))
    return out


def a_n(x: GWElement, n: int) -> GWElement:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return a_series(x, n)[n]


def _binom(a: int, b: int) -> int:
    from math import comb
    return comb(a, b) if 0 <= b <= a else 0


def a_n_neg_lH(l: int, n: int, field: FieldDesc = QQ) -> GWElement:
    """a_n(-l H) = (-1)^n sum_i binom(l, i) binom(l, n-i) <-1>^(n-i)."""
    if l < 1 or n < 0:
        raise ValueError("need l >= 1 and n >= 0")
    acc = GWElement.zero(field)
    for i in range(n + 1):
        c = _binom(l, i) * _binom(l, n - i)
        if c:
            acc = acc + c * gen((-1) ** (n - i), field)
    return (-1) ** n * acc


def a_n_neg_lH_poly(l: int, n: int, field: FieldDesc = QQ) -> GWElement:
    """Coefficient of t^n in (<1> - H t + <-1> t^2)^l."""
    if l < 1 or n < 0:
        raise ValueError("need l >= 1 and n >= 0")
    base = GWPowerSeries.from_coeffs(
        [GWElement.one(field), -hyperbolic(1, field), gen(-1, field)], n, field)
    return series_pow(base, l)[n]
