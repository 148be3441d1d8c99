# --------------------------------------------------------------------
# PowerSums :: Modules :: Exact determinants
# --------------------------------------------------------------------
"""
Exact determinants of small rational matrices.

Columns are first scaled to integers by the lcm of their denominators,
then reduced with fraction-free (Bareiss) elimination, so every
intermediate division is exact and entries grow linearly rather than
exponentially. Matrices of dimension 4 or less go through plain rational
Gaussian elimination instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod
import typing

from .core_math import as_rational
from .sumexcept import SingularSystemError

if typing.TYPE_CHECKING:
    from typing import Iterable, Sequence


__all__ = ['ExactMatrix', 'determinant', 'fit_by_determinants']

SMALL_DIMENSION = 4


@dataclass(frozen=True)
class ExactMatrix:
    """ Square matrix of Fractions, row-major. """
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.rows)
        if not rows:
            raise ValueError("a matrix needs dimension >= 1")
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix is not square: {} rows of lengths {}".format(
                len(rows), sorted({len(row) for row in rows})
            ))
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> ExactMatrix:
        return cls(tuple(tuple(row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def with_entry(self, i: int, j: int, value) -> ExactMatrix:
        """ Copy with one entry replaced. """
        rows = [list(row) for row in self.rows]
        rows[i][j] = value
        return ExactMatrix.of(rows)

    def with_column(self, j: int, values: Sequence) -> ExactMatrix:
        """ Copy with column j replaced. """
        if len(values) != self.dimension:
            raise ValueError("column has {} entries, matrix has dimension {}".format(len(values), self.dimension))
        rows = [list(row) for row in self.rows]
        for row, value in zip(rows, values):
            row[j] = value
        return ExactMatrix.of(rows)

    def minor(self, i: int, j: int) -> ExactMatrix:
        """ The submatrix without row i and column j. """
        if self.dimension == 1:
            raise ValueError("a 1x1 matrix has no minors")
        return ExactMatrix.of(
            [v for c, v in enumerate(row) if c != j]
            for r, row in enumerate(self.rows) if r != i
        )

    def determinant(self) -> Fraction:
        return determinant(self)


def _gaussian(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if rows[r][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det *= rows[k][k]
        for r in range(k + 1, n):
            if rows[r][k]:
                factor = rows[r][k] / rows[k][k]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[k])]
    return det


def _bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if not rows[k][k]:
            pivot = next((r for r in range(k + 1, n) if rows[r][k]), None)
            if pivot is None:
                return 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            rowI, rik = rows[i], rows[i][k]
            for j in range(k + 1, n):
                rowI[j] = (rowI[j] * pk - rik * rows[k][j]) // prev
            rowI[k] = 0
        prev = pk
    return sign * rows[n - 1][n - 1]


def determinant(m: ExactMatrix) -> Fraction:
    """ Exact determinant. """
    n = m.dimension
    if n <= SMALL_DIMENSION:
        return _gaussian([list(row) for row in m.rows])

    scales = [lcm(*(v.denominator for v in m.column(j))) for j in range(n)]
    if any(not any(m.column(j)) for j in range(n)):
        return Fraction(0)
    rows = [
        [(v * scales[j]).numerator for j, v in enumerate(row)]
        for row in m.rows
    ]
    return Fraction(_bareiss(rows), prod(scales))


def fit_by_determinants(label: str, rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...]:
    """
        Coefficients c with rows @ c = rhs, each one a ratio of two
        determinants. Only the fitted recurrences use this; nothing
        here is tuned for anything larger than a couple of dozen unknowns.
    """
    system = ExactMatrix.of(rows)
    if len(rhs) != system.dimension:
        raise ValueError("{}: {} equations but {} right-hand sides".format(label, system.dimension, len(rhs)))
    base = determinant(system)
    if not base:
        raise SingularSystemError(label, system.dimension)
    return tuple(
        determinant(system.with_column(j, rhs)) / base
        for j in range(system.dimension)
    )
