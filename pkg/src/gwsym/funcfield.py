"""Square classes in a rational function field F(t).

An element a(t) = N/D is congruent to N*D modulo squares.  Pulling out
the power of t, the leading coefficient and the even-multiplicity part
of a squarefree factorization leaves ``c * t**nu * u`` with u squarefree
and u(0) = 1, which is canonical in F(t)^x / (F(t)^x)^2.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from numbers import Number

from sympy import GF as SymGF, QQ as SymQQ, Poly, Symbol

from .errors import ZeroElement
from .fields import (PRIME_FIELD, FieldDesc, SquareClass, square_class, to_fraction,
                     to_prime_field)

_T = Symbol("t")


def _domain(base: FieldDesc):
    return SymGF(base.p) if base.kind == PRIME_FIELD else SymQQ


def _coerce(c, base: FieldDesc):
    if base.kind == PRIME_FIELD:
        return to_prime_field(c, base.p)
    return to_fraction(c)


def _poly(coeffs: Sequence, base: FieldDesc) -> Poly:
    cs = [_coerce(c, base) for c in coeffs]
    if base.kind != PRIME_FIELD:
        cs = [SymQQ(c.numerator, c.denominator) for c in cs]
    return Poly(list(reversed(cs)) or [0], _T, domain=_domain(base))


def _to_base(c, base: FieldDesc):
    if base.kind == PRIME_FIELD:
        return int(c) % base.p
    c = SymQQ.to_sympy(c) if not hasattr(c, "p") else c
    return Fraction(int(c.p), int(c.q))


def _coeffs_low_first(P: Poly, base: FieldDesc) -> tuple:
    return tuple(_to_base(c, base) for c in reversed(P.rep.to_list()))


def _split(a) -> tuple[Sequence, Sequence]:
    if isinstance(a, Number):
        return (a,), (1,)
    a = list(a)
    if len(a) == 2 and all(isinstance(x, Sequence) for x in a):
        return a[0], a[1]
    return a, (1,)


def class_of(a, field: FieldDesc) -> SquareClass:
    """Canonical square class of a nonzero element of ``field`` = F(t)."""
    base = field.base
    num, den = _split(a)
    N, D = _poly(num, base), _poly(den, base)
    if N.is_zero:
        raise ZeroElement("<0> is not a generator")
    if D.is_zero:
        raise ZeroDivisionError("zero denominator")
    P = N * D
    low = list(reversed(P.rep.to_list()))
    nu = next(i for i, c in enumerate(low) if c)
    if nu:
        P = P.exquo(Poly(_T**nu, _T, domain=P.domain))
    lc, factors = P.sqf_list()
    R = Poly(1, _T, domain=P.domain)
    for f, e in factors:
        if e % 2:
            R = R * f
    r0 = R.eval(0)
    const = lc * R.domain.convert(r0)
    R = R.mul_ground(R.domain.quo(R.domain.one, R.domain.convert(r0)))
    c = square_class(_to_base(P.domain.convert(const), base), base)
    return SquareClass(field, (c, nu % 2, _coeffs_low_first(R, base)))


def multiply_classes(x: SquareClass, y: SquareClass) -> SquareClass:
    (c1, n1, u1), (c2, n2, u2) = x.value, y.value
    base = x.field.base
    U = _poly(u1, base) * _poly(u2, base)
    low = [0] * (n1 + n2) + [c1.value * c2.value * c for c in _coeffs_low_first(U, base)]
    return class_of(low, x.field)


def specialize_class(x: SquareClass) -> SquareClass:
    """``<c t^nu u(t)>`` maps to ``<c u(0)>``; u(0) is 1 by normalization."""
    c, _nu, unit = x.value
    return square_class(c.value * unit[0], x.field.base)


def format_poly(coeffs: Sequence, var: str = "t") -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def format_class(x: SquareClass) -> str:
    c, nu, unit = x.value
    var = x.field.var
    factors = []
    if not c.is_one or (nu == 0 and len(unit) == 1):
        factors.append(str(c))
    if nu:
        factors.append(var)
    if len(unit) > 1:
        factors.append(f"({format_poly(unit, var)})")
    return "*".join(factors)
