"""chi_c of possibly singular curves through the normalization decomposition.

[C] = [C~] - [S~] + [S] with S the singular locus and S~ its preimage in
the normalization.  Zero-dimensional pieces Spec(L), L a finite etale
Q-algebra, contribute the trace form (x, y) -> Tr_{L/Q}(xy).

Only the smooth part is checked against independent geometry; for singular
curves a_n_chi_c returns a_n(chi_c(C)), which is chi_c(Sym^n C) by the
compatibility of a_n with the symmetric power, not by a separate computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sympy import Poly, QQ as SymQQ, Symbol

from .errors import NotSquarefree
from .fields import QQ
from .gw import GWElement, hyperbolic
from .power import a_n
from .quadform import GramMatrix, gram_to_gw

_X = Symbol("x")


def _check_poly(f) -> tuple[int, ...]:
    f = tuple(int(c) for c in f)
    while len(f) > 1 and f[-1] == 0:
        f = f[:-1]
    if len(f) < 2 or f[-1] != 1:
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {f}")
    P = Poly(list(reversed(f)), _X, domain=SymQQ)
    if P.gcd(P.diff(_X)).degree() > 0:
        raise NotSquarefree(f"{f} has a repeated factor")
    return f


@dataclass(frozen=True)
class EtaleAlgebra:
    """Product of Q[x]/(f) over monic squarefree integer polynomials f.

    Each f is a coefficient tuple, constant term first.
    """

    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(_check_poly(f) for f in self.factors))

    @property
    def degree(self) -> int:
        return sum(len(f) - 1 for f in self.factors)

    def __add__(self, other: EtaleAlgebra) -> EtaleAlgebra:
        """Disjoint union of the spectra."""
        return EtaleAlgebra(self.factors + other.factors)


def power_sums(f, count: int) -> list[int]:
    """p_k = sum of k-th powers of the roots of monic f, k = 0..count-1 (Newton)."""
    d = len(f) - 1
    c = [f[d - i] for i in range(d + 1)]  # c[i] = coefficient of x^(d-i)
    p = [d]
    for k in range(1, count):
        s = -k * c[k] if k <= d else 0
        for i in range(1, min(k - 1, d) + 1):
            s -= c[i] * p[k - i]
        p.append(s)
    return p


def trace_gram(f) -> GramMatrix:
    """Gram matrix (Tr x^(i+j)) on the power basis of Q[x]/(f)."""
    d = len(f) - 1
    p = power_sums(f, 2 * d - 1)
    return GramMatrix.from_rows([[p[i + j] for j in range(d)] for i in range(d)], QQ)


def trace_form(A: EtaleAlgebra) -> GWElement:
    out = GWElement.zero(QQ)
    for f in A.factors:
        out = out + gram_to_gw(trace_gram(f))
    return out


@dataclass(frozen=True)
class SingularCurveClass:
    genus_tilde: int
    S: EtaleAlgebra = field(default_factory=EtaleAlgebra)
    S_tilde: EtaleAlgebra = field(default_factory=EtaleAlgebra)

    def __post_init__(self):
        if self.genus_tilde < 0:
            raise ValueError("genus must be nonnegative")
        if self.S_tilde.degree < self.S.degree:
            raise ValueError("the normalization must surject onto the singular locus")

    @classmethod
    def smooth(cls, g: int) -> SingularCurveClass:
        return cls(g)


def chi_c_curve(c: SingularCurveClass) -> GWElement:
    """(1 - g~) H - Tr(S~) + Tr(S)."""
    return hyperbolic(1 - c.genus_tilde, QQ) - trace_form(c.S_tilde) + trace_form(c.S)


def a_n_chi_c(c: SingularCurveClass, n: int) -> GWElement:
    return a_n(chi_c_curve(c), n)
