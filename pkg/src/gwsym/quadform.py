"""Congruence diagonalization of exact symmetric Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularGram, UnsupportedField
from .fields import PRIME_FIELD, QQ, FieldDesc, square_class, to_fraction, to_prime_field
from .gw import GWElement


@dataclass(frozen=True)
class GramMatrix:
    field: FieldDesc
    entries: tuple

    def __post_init__(self):
        if self.field.is_function_field:
            raise UnsupportedField("Gram matrices over function fields are not supported")
        rows = tuple(tuple(_coerce(x, self.field) for x in row) for row in self.entries)
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("Gram matrix must be square")
        for i in range(d):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows, field: FieldDesc = QQ) -> GramMatrix:
        return cls(field, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)


def _coerce(x, field):
    if field.kind == PRIME_FIELD:
        return to_prime_field(x, field.p)
    return to_fraction(x)


def diagonalize(G: GramMatrix) -> list:
    """Diagonal entries of a matrix congruent to G.

    Symmetric Gaussian elimination: the first nonzero diagonal entry of the
    trailing block is the pivot; if that diagonal is all zero, row and column
    j are added into i for some entries[i][j] != 0, which makes the (i, i)
    entry 2 * entries[i][j] != 0 (characteristic is odd or zero).
    """
    A = [list(r) for r in G.entries]
    d = len(A)
    if G.field.kind == PRIME_FIELD:
        p = G.field.p
        red = lambda x: x % p
        inv = lambda x: pow(x, -1, p)
    else:
        red = lambda x: x
        inv = lambda x: 1 / Fraction(x)
    out = []
    for k in range(d):
        piv = next((i for i in range(k, d) if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, d) for j in range(k, d)
                         if i != j and A[i][j]), None)
            if pair is None:
                raise SingularGram(f"rank {k} < dimension {d}")
            i, j = pair
            for c in range(d):
                A[i][c] = red(A[i][c] + A[j][c])
            for r in range(d):
                A[r][i] = red(A[r][i] + A[r][j])
            piv = i
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            for r in A:
                r[k], r[piv] = r[piv], r[k]
        a = A[k][k]
        ia = inv(a)
        for r in range(k + 1, d):
            f = red(A[r][k] * ia)
            if not f:
                continue
            # row_r -= f row_k, then col_r -= f col_k; keeps A symmetric
            for c in range(k, d):
                A[r][c] = red(A[r][c] - f * A[k][c])
            for x in range(k, d):
                A[x][r] = red(A[x][r] - f * A[x][k])
        out.append(a)
    return out


def gram_to_gw(G: GramMatrix) -> GWElement:
    return GWElement(G.field, [(square_class(a, G.field), 1) for a in diagonalize(G)])
