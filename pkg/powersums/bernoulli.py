# --------------------------------------------------------------------
# PowerSums :: Modules :: Bernoulli numbers
# --------------------------------------------------------------------
"""
Even-index Bernoulli numbers B_2k four ways:

    bernoulli_det            k x k determinant sharing its first k-1
                             columns with the S_2k system, last column 1..k
    bernoulli_vanmalderen    Hessenberg determinant of inverse odd factorials
    bernoulli_from_faulhaber derivative of the S_2k polynomial at n = 0
    bernoulli_oracle         the classical recurrence
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt, prod
import typing

from .core_math import binomial
from .linalg import ExactMatrix, determinant
from .powersum import Basis, Parity, faulhaber_poly, faulhaber_rows

if typing.TYPE_CHECKING:
    from typing import Optional


__all__ = [
    'BernoulliValue', 'bernoulli_oracle', 'bernoulli_prefactor', 'bernoulli_matrix',
    'bernoulli_det', 'vanmalderen_matrix', 'bernoulli_vanmalderen',
    'bernoulli_from_faulhaber', 'von_staudt_clausen_denominator',
]


@dataclass(frozen=True)
class BernoulliValue:
    index: int
    value: Fraction

    def __post_init__(self):
        if self.index < 2 or self.index % 2:
            raise ValueError("BernoulliValue holds even indices >= 2, got {}".format(self.index))

    @property
    def expected_denominator(self) -> int:
        return von_staudt_clausen_denominator(self.index)

    @property
    def denominator_ok(self) -> bool:
        """ The reduced denominator is the von Staudt-Clausen prime product. """
        return self.value.denominator == self.expected_denominator


def _check(k: int) -> None:
    if k < 1:
        raise ValueError("order k must be >= 1, got {}".format(k))


@lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple[Fraction, ...]:
    """ B_0..B_m from sum_{j=0..m} C(m+1, j) B_j = 0, with B_1 = -1/2. """
    table = [Fraction(1)]
    for i in range(1, m + 1):
        table.append(-sum(binomial(i + 1, j) * table[j] for j in range(i)) / (i + 1))
    return tuple(table)


def bernoulli_oracle(m: int) -> Fraction:
    if m < 0:
        raise ValueError("Bernoulli index must be >= 0, got {}".format(m))
    return _bernoulli_table(m)[m]


def bernoulli_prefactor(k: int) -> Fraction:
    """ 4 (k+1)! / ((2k+2)! 2^k) """
    return Fraction(4 * factorial(k + 1), factorial(2 * k + 2) * 2 ** k)


def bernoulli_matrix(k: int) -> ExactMatrix:
    """ The S_2k system's first k-1 columns, C(2i+1, 2j), with last column i. """
    _check(k)
    rows = faulhaber_rows(Parity.EVEN, k)
    return ExactMatrix.of(row + [i] for i, row in enumerate(rows, 1))


def bernoulli_det(k: int, matrix: Optional[ExactMatrix] = None) -> Fraction:
    """ B_2k = prefactor * det; pass matrix to evaluate a modified system. """
    _check(k)
    if matrix is None:
        matrix = bernoulli_matrix(k)
    return bernoulli_prefactor(k) * determinant(matrix)


def vanmalderen_matrix(k: int) -> ExactMatrix:
    """ 1/(2(i-j)+3)! on and below the diagonal, 1 on the superdiagonal. """
    _check(k)
    return ExactMatrix.of(
        [
            Fraction(1, factorial(2 * (i - j) + 3)) if j <= i else (1 if j == i + 1 else 0)
            for j in range(k)
        ]
        for i in range(k)
    )


def bernoulli_vanmalderen(k: int) -> Fraction:
    """ B_2k = (-1)^{k+1} (2k)! / (2 (2^{2k-1} - 1)) * det """
    _check(k)
    scale = Fraction((-1) ** (k + 1) * factorial(2 * k), 2 * (2 ** (2 * k - 1) - 1))
    return scale * determinant(vanmalderen_matrix(k))


def bernoulli_from_faulhaber(k: int) -> Fraction:
    """ d/dn of S_2k at n = 0, i.e. d/dN of the polynomial in N at N = 1/2. """
    _check(k)
    fp = faulhaber_poly(Parity.EVEN, k, Basis.N)
    return fp.body.derivative()(Fraction(1, 2))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, isqrt(p) + 1))


def von_staudt_clausen_denominator(m: int) -> int:
    """ Product of the primes p with (p - 1) | m, for even m >= 2. """
    if m < 2 or m % 2:
        raise ValueError("need an even index >= 2, got {}".format(m))
    return prod(d + 1 for d in range(1, m + 1) if m % d == 0 and _is_prime(d + 1))
