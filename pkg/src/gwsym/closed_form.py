"""Closed formulas for chi(Sym^n C) of a smooth projective genus-g curve."""

from __future__ import annotations

import math

from .errors import NonIntegralCoefficient
from .fields import QQ, FieldDesc
from .gw import GWElement, gen, hyperbolic, pm


def binom_gen(x: int, n: int) -> int:
    """x (x-1) ... (x-n+1) / n! for any integer x and n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = 1
    for k in range(n):
        num *= x - k
    return num // math.factorial(n)


def _half(v: int) -> int:
    if v % 2:
        raise NonIntegralCoefficient(f"{v}/2 is not an integer")
    return v // 2


def rank_formula(g: int, n: int) -> int:
    """Topological Euler characteristic (-1)^n binom(2g-2, n) of Sym^n C."""
    return (-1) ** n * binom_gen(2 * g - 2, n)


def chi_curve(g: int, field: FieldDesc = QQ) -> GWElement:
    return hyperbolic(1 - g, field)


def chi_sym_closed(g: int, n: int, field: FieldDesc = QQ) -> GWElement:
    """chi(Sym^n C / k) in GW(k), as a Witt-type sum plus hyperbolic part.

    Even n = 2m: sum_i binom(g, i) <-1>^i + (binom(2g-2, n) - sum_i binom(g, i)) / 2 * H,
    i <= m; odd n: -binom(2g-2, n) / 2 * H.  n = 0 gives <1>, the point.
    """
    if g < 0 or n < 0:
        raise ValueError("genus and n must be nonnegative")
    B = binom_gen(2 * g - 2, n)
    if n % 2:
        return hyperbolic(-_half(B), field)
    m = n // 2
    q = GWElement.zero(field)
    total = 0
    for i in range(m + 1):
        c = binom_gen(g, i)
        total += c
        q = q + c * gen((-1) ** i, field)
    return q + hyperbolic(_half(B - total), field)


def chi_sym_closed_pm(g: int, n: int) -> tuple[int, int]:
    """The same value written through the multiplicities of <1> and <-1>."""
    B = binom_gen(2 * g - 2, n)
    if n % 2:
        return -_half(B), -_half(B)
    m = n // 2
    s = (-1) ** m * binom_gen(g - 1, m)
    return _half(B + s), _half(B - s)


def chi_sym_closed_second(g: int, n: int, field: FieldDesc = QQ) -> GWElement:
    return pm(*chi_sym_closed_pm(g, n), field)
