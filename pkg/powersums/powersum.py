# --------------------------------------------------------------------
# PowerSums :: Modules :: Power sums
# --------------------------------------------------------------------
"""
Sums of powers S_k(n) = 1^k + 2^k + ... + n^k by every route that needs
no Chebyshev machinery:

    - direct summation (the oracle every other route is checked against)
    - the triangular systems in N = n + 1/2 and their forward solution
    - Faulhaber polynomials in N and in S_1, built from determinants
    - the operator x d/dx on the geometric polynomial, its Stirling
      expansion, and the polynomial Q_n(x; k) in Stirling and Eulerian form
    - the alternating binomial sums over P_k(j)
    - doubling formulas for S_{2k-1}(2n)
    - identity checks: the even/odd ratio, Chen's recurrences and the
      fitted recurrence over alternating binomial sums.

Every route returns Python ints; a route that ends up with a denominator
raises InconsistencyError rather than rounding.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
import typing

from .core_math import (
    as_integer, as_rational, binomial, eulerian_polynomial, falling_factorial,
    half_cosine_weight, partition_tuples, stirling2,
)
from .linalg import ExactMatrix, determinant, fit_by_determinants
from .poly import Polynomial, geometric_polynomial
from .sumexcept import InconsistencyError

if typing.TYPE_CHECKING:
    from typing import Sequence, Union


__all__ = [
    'Parity', 'Basis', 'Factor', 'FaulhaberPolynomial', 'QForm',
    'powersum_oracle', 'theorem1_solve',
    'delta_constant', 'omega_constant', 'lambda_constant',
    'faulhaber_rows', 'faulhaber_from_rows', 'faulhaber_poly', 'eval_faulhaber',
    'q_polynomial', 'powersum_via_q', 'powersum_via_operator', 'powersum_via_stirling',
    'pk_polynomial', 'exotic_powersum', 'doubling_terms', 'doubling_identities',
    'remark2_ratio', 'chen_recurrences', 'alternating_binomial_sum', 'remark5_fit',
    'IdentityCheck', 'IdentityReport', 'verify_identities',
]


class Parity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'

    @classmethod
    def of_index(cls, k: int) -> Parity:
        """ Parity of the power-sum index k, i.e. S_2m is EVEN. """
        return cls.EVEN if k % 2 == 0 else cls.ODD


class Basis(str, Enum):
    N = 'N'
    S1 = 'S1'


class Factor(str, Enum):
    """ What the body of an S_1-basis polynomial is multiplied by. """
    ONE = '1'
    S2 = 'S2'
    S1_SQUARED = 'S1^2'


def _check_order(k: int, least: int = 1) -> None:
    if k < least:
        raise ValueError("order k must be >= {}, got {}".format(least, k))


def _check_terms(n: int) -> None:
    if n < 1:
        raise ValueError("power sums need n >= 1, got {}".format(n))


def _half_n(n: int) -> Fraction:
    """ N = n + 1/2 """
    return Fraction(2 * n + 1, 2)


######################################################################
# Oracle


def powersum_oracle(k: int, n: int) -> int:
    """ 1^k + 2^k + ... + n^k by direct summation. """
    _check_order(k, 0)
    _check_terms(n)
    return sum(r ** k for r in range(1, n + 1))


######################################################################
# Triangular systems in N


def theorem1_solve(parity: Union[Parity, str], k: int, n: int) -> list[int]:
    """
        Forward substitution through the triangular system

            even:  sum_{j<=i} 4^j C(2i+1, 2j) S_2j     = 4^i N^{2i+1} - N
            odd:   sum_{j<=i} 4^j C(2i, 2j-1) S_{2j-1} = 4^i N^{2i} - 1

        for i = 1..k. Returns [S_2, ..., S_2k] or [S_1, ..., S_{2k-1}].
    """
    parity = Parity(parity)
    _check_order(k)
    _check_terms(n)
    N = _half_n(n)
    solved: list[int] = []
    for i in range(1, k + 1):
        if parity is Parity.EVEN:
            rhs = 4 ** i * N ** (2 * i + 1) - N
        else:
            rhs = 4 ** i * N ** (2 * i) - 1
        known = sum(_system_coeff(parity, i, j) * solved[j - 1] for j in range(1, i))
        value = (rhs - known) / _system_coeff(parity, i, i)
        index = 2 * i if parity is Parity.EVEN else 2 * i - 1
        solved.append(as_integer(value, "S_{}({}) by forward substitution".format(index, n)))
    return solved


def _system_coeff(parity: Parity, i: int, j: int) -> int:
    if parity is Parity.EVEN:
        return 4 ** j * binomial(2 * i + 1, 2 * j)
    return 4 ** j * binomial(2 * i, 2 * j - 1)


######################################################################
# Determinantal Faulhaber polynomials


def delta_constant(k: int) -> Fraction:
    """ (k+1)! / ((2k+2)! 2^{k-1}) """
    return Fraction(factorial(k + 1), factorial(2 * k + 2) * 2 ** (k - 1))


def omega_constant(k: int) -> Fraction:
    """ 1 / (k! 8^k) """
    return Fraction(1, factorial(k) * 8 ** k)


def lambda_constant(k: int) -> Fraction:
    """ 3 (k+1)! / ((2k+2)! 2^k) """
    return Fraction(3 * factorial(k + 1), factorial(2 * k + 2) * 2 ** k)


@dataclass(frozen=True)
class FaulhaberPolynomial:
    """
        S_2k or S_{2k-1} as a polynomial.

        In the N basis the body is the whole polynomial in N = n + 1/2.
        In the S1 basis the body is a polynomial in S_1 which still has to
        be multiplied by `factor` (S_2 for even indices, S_1^2 for odd
        ones with k >= 2, nothing for S_1 itself).
    """
    basis: Basis
    parity: Parity
    k: int
    body: Polynomial
    factor: Factor = Factor.ONE

    @property
    def index(self) -> int:
        """ The power the polynomial sums. """
        return 2 * self.k if self.parity is Parity.EVEN else 2 * self.k - 1


def faulhaber_rows(parity: Union[Parity, str], k: int) -> list[list[int]]:
    """
        The numeric part of the k x k determinant: row i (1..k) holds
        C(2i+1, 2j) for even indices or C(2i, 2j-1) for odd ones, j = 1..k-1.
        The last column is symbolic and left to the caller.
    """
    parity = Parity(parity)
    _check_order(k)
    if parity is Parity.EVEN:
        return [[binomial(2 * i + 1, 2 * j) for j in range(1, k)] for i in range(1, k + 1)]
    return [[binomial(2 * i, 2 * j - 1) for j in range(1, k)] for i in range(1, k + 1)]


def _last_column_cofactors(rows: Sequence[Sequence]) -> list[Fraction]:
    """ Cofactors along the (missing) last column of a k x k matrix whose first k-1 columns are rows. """
    k = len(rows)
    if k == 1:
        return [Fraction(1)]
    cofactors = []
    for i in range(k):
        minor = ExactMatrix.of(row for r, row in enumerate(rows) if r != i)
        sign = -1 if (i + k - 1) % 2 else 1
        cofactors.append(sign * determinant(minor))
    return cofactors


def faulhaber_from_rows(parity: Union[Parity, str], k: int, rows: Sequence[Sequence],
                        basis: Union[Basis, str] = Basis.N) -> FaulhaberPolynomial:
    """
        Expand the determinant along its last column, whose i-th entry is
        (2N)^{2i} - 1, or (1 + 8 S_1)^i - 1 in the S1 basis, and apply the
        matching constant. `rows` normally comes from faulhaber_rows; passing
        anything else rebuilds the polynomial from a modified matrix.
    """
    parity, basis = Parity(parity), Basis(basis)
    _check_order(k)
    if len(rows) != k or any(len(row) != k - 1 for row in rows):
        raise ValueError("expected {} rows of {} entries".format(k, k - 1))
    cofactors = _last_column_cofactors(rows)

    if basis is Basis.N:
        # sum_i c_i ((2N)^{2i} - 1), a polynomial in N
        expansion = Polynomial()
        for i, c in enumerate(cofactors, 1):
            expansion += Polynomial.monomial(2 * i, c * 4 ** i) - c
        if parity is Parity.EVEN:
            body = expansion.shift(1) * delta_constant(k)
        else:
            body = expansion * omega_constant(k)
        return FaulhaberPolynomial(basis, parity, k, body)

    # (2N)^2 = 1 + 8 S_1
    onePlus8S1 = Polynomial([1, 8])
    expansion = Polynomial()
    for i, c in enumerate(cofactors, 1):
        expansion += (onePlus8S1 ** i - 1) * c
    if parity is Parity.EVEN:
        # N = 3 S_2 / (2 S_1)
        return FaulhaberPolynomial(basis, parity, k, expansion.divide_by_x(1) * lambda_constant(k), Factor.S2)
    if k == 1:
        return FaulhaberPolynomial(basis, parity, k, expansion * omega_constant(k), Factor.ONE)
    if expansion[1]:
        raise InconsistencyError("linear S_1 coefficient of S_{}".format(2 * k - 1), expansion[1])
    return FaulhaberPolynomial(basis, parity, k, expansion.divide_by_x(2) * omega_constant(k), Factor.S1_SQUARED)


@lru_cache(maxsize=None)
def _faulhaber_poly(parity: Parity, k: int, basis: Basis) -> FaulhaberPolynomial:
    return faulhaber_from_rows(parity, k, faulhaber_rows(parity, k), basis)


def faulhaber_poly(parity: Union[Parity, str], k: int, basis: Union[Basis, str] = Basis.N) -> FaulhaberPolynomial:
    """ S_2k (even) or S_{2k-1} (odd) as a polynomial in N or in S_1. """
    _check_order(k)
    return _faulhaber_poly(Parity(parity), k, Basis(basis))


def eval_faulhaber(fp: FaulhaberPolynomial, n: int) -> Fraction:
    """ Substitute N = n + 1/2, or S_1 and S_2 at n. """
    if n < 0:
        raise ValueError("n must be >= 0, got {}".format(n))
    if fp.basis is Basis.N:
        return fp.body(_half_n(n))
    s1 = Fraction(n * (n + 1), 2)
    value = fp.body(s1)
    if fp.factor is Factor.S2:
        value *= Fraction(n * (n + 1) * (2 * n + 1), 6)
    elif fp.factor is Factor.S1_SQUARED:
        value *= s1 * s1
    return value


######################################################################
# Operator routes


class QForm(str, Enum):
    STIRLING = 'stirling'
    EULERIAN = 'eulerian'


_ONE_MINUS_X = Polynomial([1, -1])


def _q_stirling(k: int, n: int) -> Polynomial:
    total = Polynomial()
    tail = Polynomial.monomial(n + 1)
    for j in range(k + 1):
        weight = factorial(j) * stirling2(k, j)
        if not weight:
            continue
        inner = Polynomial()
        for r in range(j + 1):
            inner += Polynomial.monomial(r, binomial(n + 1, j - r)) * _ONE_MINUS_X ** (k - r)
        head = Polynomial.monomial(j) * _ONE_MINUS_X ** (k - j)
        total += (head - tail * inner) * weight
    return total


def _q_eulerian(k: int, n: int) -> Polynomial:
    inner = Polynomial()
    for j in range(k + 1):
        inner += _ONE_MINUS_X ** j * eulerian_polynomial(k - j) * (binomial(k, j) * (n + 1) ** j)
    return eulerian_polynomial(k) - Polynomial.monomial(n + 1) * inner


def q_polynomial(k: int, n: int, form: Union[QForm, str] = QForm.EULERIAN) -> Polynomial:
    """
        Q_n(x; k) = (1 - x)^{k+1} (x d/dx)^k (1 + x + ... + x^n),
        a polynomial of degree n + k + 1.
    """
    _check_order(k)
    _check_terms(n)
    if QForm(form) is QForm.STIRLING:
        return _q_stirling(k, n)
    return _q_eulerian(k, n)


def powersum_via_q(k: int, n: int, form: Union[QForm, str] = QForm.EULERIAN) -> int:
    """ (-1)^{k+1} / (k+1)! times the (k+1)-th derivative of Q_n(x; k) at 1. """
    q = q_polynomial(k, n, form)
    value = q.derivative(k + 1)(1) * (-1) ** (k + 1) / factorial(k + 1)
    return as_integer(value, "S_{}({}) from Q_n(x; k)".format(k, n))


def powersum_via_operator(k: int, n: int) -> int:
    """ (x d/dx)^k applied to 1 + x + ... + x^n, evaluated at 1. """
    _check_order(k)
    _check_terms(n)
    return as_integer(geometric_polynomial(n).xddx(k)(1), "S_{}({}) by x d/dx".format(k, n))


def powersum_via_stirling(k: int, n: int) -> int:
    """ sum_j {k, j} times the j-th derivative of the geometric polynomial at 1. """
    _check_order(k)
    _check_terms(n)
    g = geometric_polynomial(n)
    value = sum(stirling2(k, j) * g.derivative(j)(1) for j in range(1, k + 1))
    return as_integer(value, "S_{}({}) by Stirling expansion".format(k, n))


######################################################################
# Alternating binomial sums


@lru_cache(maxsize=None)
def pk_polynomial(k: int) -> Polynomial:
    """
        P_k(j) = 2^k sum over partitions of k of the cos(x/2) Faa di Bruno
        weight times the falling factorial (2j)_m. Degree k, no constant term.
    """
    _check_order(k)
    twoJ = Polynomial([0, 2])
    total = Polynomial()
    for pt in partition_tuples(k):
        total += falling_factorial(twoJ, pt.m) * half_cosine_weight(pt)
    return total * 2 ** k


def exotic_powersum(k: int, n: int) -> int:
    """ S_2k = 2^{-(k+1)} sum_{j=1..n} (-1)^{n+j} 4^j P_k(j) C(n+j, 2j) """
    _check_order(k)
    _check_terms(n)
    pk = pk_polynomial(k)
    total = sum(
        (-1) ** (n + j) * 4 ** j * pk(j) * binomial(n + j, 2 * j)
        for j in range(1, n + 1)
    )
    return as_integer(Fraction(total) / 2 ** (k + 1), "S_{}({}) by alternating sum".format(2 * k, n))


######################################################################
# Doubling


def doubling_terms(k: int) -> list[tuple[int, int, int]]:
    """
        S_{2k-1}(2n) = (2n+1) n^{2k-1} + sum of coeff * n^power * S_index(n);
        returns the (coeff, power, index) triples of the sum.
    """
    _check_order(k)
    return [(2 * binomial(2 * k - 1, 2 * j), 2 * k - 2 * j - 1, 2 * j) for j in range(1, k)]


def doubling_identities(k: int, n: int) -> tuple[int, int, int]:
    """ S_{2k-1}(2n) three ways, each using power sums at n only. """
    _check_order(k)
    _check_terms(n)
    S = {j: powersum_oracle(j, n) for j in range(0, 2 * k)}
    first = (2 * n + 1) * n ** (2 * k - 1) + sum(
        coeff * n ** power * S[index] for coeff, power, index in doubling_terms(k)
    )
    second = 2 * S[2 * k - 1] + n ** (2 * k) + sum(
        binomial(2 * k - 1, j) * S[j] * n ** (2 * k - 1 - j) for j in range(1, 2 * k - 1)
    )
    third = 4 * S[2 * k - 1] - n ** (2 * k - 1) + 2 * sum(
        binomial(2 * k - 1, 2 * j - 1) * S[2 * j - 1] * n ** (2 * k - 2 * j) for j in range(1, k)
    )
    return first, second, third


######################################################################
# Identities


def remark2_ratio(k: int, n: int) -> Fraction:
    """
        sum_j 4^j C(2k+1, 2j) S_2j  /  sum_j 4^j C(2k, 2j-1) S_{2j-1},
        which is N = n + 1/2 for every k.
    """
    _check_order(k)
    _check_terms(n)
    even = sum(4 ** j * binomial(2 * k + 1, 2 * j) * powersum_oracle(2 * j, n) for j in range(1, k + 1))
    odd = sum(4 ** j * binomial(2 * k, 2 * j - 1) * powersum_oracle(2 * j - 1, n) for j in range(1, k + 1))
    return Fraction(even, odd)


@dataclass(frozen=True)
class ChenSums:
    evenLeft: int
    evenRight: Fraction
    oddLeft: int
    oddRight: Fraction


def chen_recurrences(k: int, n: int) -> ChenSums:
    """
        sum_{j=1..k} C(2k+1, 2j) S_2j     = ((n+1)^{2k+1} + n^{2k+1} - 2n - 1) / 2
        sum_{j=1..k} C(2k, 2j-1) S_{2j-1} = ((n+1)^{2k} + n^{2k} - 1) / 2
    """
    _check_order(k)
    _check_terms(n)
    return ChenSums(
        evenLeft=sum(binomial(2 * k + 1, 2 * j) * powersum_oracle(2 * j, n) for j in range(1, k + 1)),
        evenRight=Fraction((n + 1) ** (2 * k + 1) + n ** (2 * k + 1) - 2 * n - 1, 2),
        oddLeft=sum(binomial(2 * k, 2 * j - 1) * powersum_oracle(2 * j - 1, n) for j in range(1, k + 1)),
        oddRight=Fraction((n + 1) ** (2 * k) + n ** (2 * k) - 1, 2),
    )


def alternating_binomial_sum(k: int, n: int) -> int:
    """ sum_{j=1..n} (-1)^{n+j} 4^j j^k C(n+j, 2j) """
    return sum((-1) ** (n + j) * 4 ** j * j ** k * binomial(n + j, 2 * j) for j in range(1, n + 1))


FIT_VALIDATION_POINTS = 5


@lru_cache(maxsize=None)
def remark5_fit(k: int) -> tuple[Fraction, ...]:
    """
        Coefficients c_{k,1..k} with sum_r c_{k,r} S_2r(n) equal to the
        alternating binomial sum of j^k. Fitted on n = 1..k, then checked
        on the next few n.
    """
    _check_order(k)
    label = "alternating sum of j^{}".format(k)
    rows = [[powersum_oracle(2 * r, n) for r in range(1, k + 1)] for n in range(1, k + 1)]
    rhs = [alternating_binomial_sum(k, n) for n in range(1, k + 1)]
    coeffs = fit_by_determinants(label, rows, rhs)
    for n in range(k + 1, k + 1 + FIT_VALIDATION_POINTS):
        fitted = sum(c * powersum_oracle(2 * r, n) for r, c in enumerate(coeffs, 1))
        if fitted != alternating_binomial_sum(k, n):
            raise InconsistencyError("{} at n={}".format(label, n), fitted)
    return coeffs


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    k: int
    n: int
    expected: Fraction
    got: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass
class IdentityReport:
    k: int
    n: int
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)

    @property
    def failures(self) -> list[IdentityCheck]:
        return [check for check in self.checks if not check.ok]


def verify_identities(k: int, n: int, fit: bool = True) -> IdentityReport:
    """
        The even/odd ratio, both of Chen's recurrences and, when fit is set,
        the fitted alternating-sum recurrence, all at (k, n).
    """
    _check_order(k)
    _check_terms(n)
    report = IdentityReport(k, n)
    add = report.checks.append
    add(IdentityCheck('ratio', k, n, _half_n(n), remark2_ratio(k, n)))
    chen = chen_recurrences(k, n)
    add(IdentityCheck('chen-even', k, n, chen.evenRight, Fraction(chen.evenLeft)))
    add(IdentityCheck('chen-odd', k, n, chen.oddRight, Fraction(chen.oddLeft)))
    if fit:
        coeffs = remark5_fit(k)
        fitted = sum(c * powersum_oracle(2 * r, n) for r, c in enumerate(coeffs, 1))
        add(IdentityCheck('fitted-recurrence', k, n, Fraction(alternating_binomial_sum(k, n)), as_rational(fitted)))
        add(IdentityCheck('fitted-sum', k, n, Fraction(4), as_rational(sum(coeffs))))
    return report
