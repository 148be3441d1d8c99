# --------------------------------------------------------------------
# PowerSums :: Modules :: Chebyshev routes
# --------------------------------------------------------------------
"""
Chebyshev polynomials of the second kind and the power sums that fall out
of differentiating U_2n(cos(x/2)) = sin(Nx)/sin(x/2) and U_n(cos(x/2)) at
the origin.

Two independent realizations live here:

    faa_even / faa_odd
        closed Faa di Bruno sums over partition tuples, with the
        derivatives of U_n at 1 read off the binomial formula
    powersum_via_chebyshev_series
        the same derivatives obtained by composing U_n with the cosine
        series and reading coefficients
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .core_math import as_integer, binomial, half_cosine_weight, partition_tuples
from .poly import Polynomial
from .powersum import exotic_powersum
from .series import TrigKind, TruncatedSeries, series_div, series_trig


__all__ = [
    'ChebyshevU', 'cheb_u', 'cheb_u_explicit', 'cheb_u_derivative_at_1',
    'faa_even', 'faa_odd', 'met5_powersum', 'powersum_via_chebyshev_series',
    'even_binomial_coefficients', 'odd_binomial_coefficients',
    'compose_with_half_cosine', 'trig_identity_series',
]


@dataclass(frozen=True)
class ChebyshevU:
    n: int
    poly: Polynomial

    def __call__(self, value):
        return self.poly(value)


_TWO_X = Polynomial([0, 2])


@lru_cache(maxsize=None)
def _u_recurrence(n: int) -> Polynomial:
    if n == 0:
        return Polynomial([1])
    older, old = Polynomial([1]), _TWO_X
    for _ in range(2, n + 1):
        older, old = old, _TWO_X * old - older
    return old


def cheb_u(n: int) -> ChebyshevU:
    """ U_n from U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}. """
    if n < 0:
        raise ValueError("Chebyshev index must be >= 0, got {}".format(n))
    return ChebyshevU(n, _u_recurrence(n))


def cheb_u_explicit(n: int) -> ChebyshevU:
    """ U_n = sum_j (-1)^j C(n-j, j) (2x)^{n-2j} """
    if n < 0:
        raise ValueError("Chebyshev index must be >= 0, got {}".format(n))
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * binomial(n - j, j) * 2 ** (n - 2 * j)
    return ChebyshevU(n, Polynomial(coeffs))


def cheb_u_derivative_at_1(n: int, j: int) -> int:
    """ U_n^{(j)}(1) = 2^j j! C(n+j+1, 2j+1) """
    if n < 0 or j < 0:
        raise ValueError("need n, j >= 0, got n={}, j={}".format(n, j))
    return 2 ** j * factorial(j) * binomial(n + j + 1, 2 * j + 1)


######################################################################
# Faa di Bruno sums


def _check(k: int, n: int) -> None:
    if k < 1:
        raise ValueError("order k must be >= 1, got {}".format(k))
    if n < 1:
        raise ValueError("power sums need n >= 1, got {}".format(n))


def _partition_sum(j: int, u: int) -> Fraction:
    """
        sum over partitions of j of weight * U_u^{(m)}(1): up to the sign
        (-1)^j, the 2j-th derivative of U_u(cos(x/2)) at 0.
    """
    return sum(
        (half_cosine_weight(pt) * cheb_u_derivative_at_1(u, pt.m) for pt in partition_tuples(j)),
        Fraction(0),
    )


def faa_even(k: int, n: int) -> int:
    """ S_2k = 1/2 sum_pt weight * 2^m m! C(2n+m+1, 2m+1) """
    _check(k, n)
    value = _partition_sum(k, 2 * n) / 2
    return as_integer(value, "S_{}({}) by Faa di Bruno".format(2 * k, n))


def _odd_bracket(k: int, n: int, inner) -> Fraction:
    """ (n+1) n^{2k-1} + sum_{j=1..k-1} 4^j n^{2k-2j-1} C(2k-1, 2j) inner(j) """
    total = Fraction((n + 1) * n ** (2 * k - 1))
    for j in range(1, k):
        total += 4 ** j * n ** (2 * k - 2 * j - 1) * binomial(2 * k - 1, 2 * j) * inner(j)
    return total


def faa_odd(k: int, n: int) -> int:
    """ S_{2k-1} = (2 / 4^k) [(n+1) n^{2k-1} + sum_j 4^j n^{2k-2j-1} C(2k-1, 2j) inner_j] """
    _check(k, n)
    value = _odd_bracket(k, n, lambda j: _partition_sum(j, n)) * 2 / 4 ** k
    return as_integer(value, "S_{}({}) by Faa di Bruno".format(2 * k - 1, n))


def met5_powersum(k: int, n: int) -> int:
    """ S_2k through the alternating binomial sums of P_k(j). """
    return exotic_powersum(k, n)


######################################################################
# Series composition


def compose_with_half_cosine(u: ChebyshevU, order: int) -> TruncatedSeries:
    """ U(cos(x/2)) through x^order, by Horner over series values. """
    cosine = series_trig(TrigKind.COS, Fraction(1, 2), order)
    return u(cosine)


def _even_coefficient(series: TruncatedSeries, j: int) -> Fraction:
    """ (-1)^j (2j)! [x^{2j}]: the signed 2j-th derivative at 0. """
    return (-1) ** j * factorial(2 * j) * series[2 * j]


def powersum_via_chebyshev_series(index: int, n: int) -> int:
    """
        S_index(n) from the Maclaurin coefficients of U_2n(cos(x/2)) for
        even indices, or of U_n(cos(x/2)) for odd ones.
    """
    if index < 1:
        raise ValueError("power index must be >= 1, got {}".format(index))
    if n < 1:
        raise ValueError("power sums need n >= 1, got {}".format(n))
    if index % 2 == 0:
        k = index // 2
        series = compose_with_half_cosine(cheb_u(2 * n), 2 * k)
        value = _even_coefficient(series, k) / 2
    else:
        k = (index + 1) // 2
        series = compose_with_half_cosine(cheb_u(n), 2 * (k - 1))
        value = _odd_bracket(k, n, lambda j: _even_coefficient(series, j)) * 2 / 4 ** k
    return as_integer(value, "S_{}({}) by Chebyshev series".format(index, n))


def trig_identity_series(n: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """ sin(Nx)/sin(x/2) and U_2n(cos(x/2)), both through x^order, N = n + 1/2. """
    if n < 0 or order < 0:
        raise ValueError("need n, order >= 0, got n={}, order={}".format(n, order))
    N = Fraction(2 * n + 1, 2)
    quotient = series_div(
        series_trig(TrigKind.SIN, N, order + 1),
        series_trig(TrigKind.SIN, Fraction(1, 2), order + 1),
    )
    return quotient, compose_with_half_cosine(cheb_u(2 * n), order)


######################################################################
# Binomial-basis coefficients


def even_binomial_coefficients(k: int) -> list[Fraction]:
    """
        p_{k,1..k} with S_2k = sum_m p_{k,m} C(2n+m+1, 2m+1), grouping the
        Faa di Bruno sum by block count m.
    """
    if k < 1:
        raise ValueError("order k must be >= 1, got {}".format(k))
    coeffs = [Fraction(0)] * k
    for pt in partition_tuples(k):
        coeffs[pt.m - 1] += half_cosine_weight(pt) * 2 ** pt.m * factorial(pt.m) / 2
    return coeffs


def odd_binomial_coefficients(k: int, prefactor: bool = False) -> list[Polynomial]:
    """
        Q_{k,1..k}(n) with S_{2k-1} = (2 / 4^k) sum_j Q_{k,j}(n) C(n+j, 2j-1),
        as polynomials in n. With prefactor set, the 2 / 4^k is folded in.
    """
    if k < 1:
        raise ValueError("order k must be >= 1, got {}".format(k))
    coeffs = [Polynomial() for _ in range(k)]
    coeffs[0] = Polynomial.monomial(2 * k - 1)
    for j in range(1, k):
        outer = 4 ** j * binomial(2 * k - 1, 2 * j)
        for pt in partition_tuples(j):
            weight = half_cosine_weight(pt) * 2 ** pt.m * factorial(pt.m)
            coeffs[pt.m] += Polynomial.monomial(2 * k - 2 * j - 1, outer * weight)
    if prefactor:
        scale = Fraction(2, 4 ** k)
        coeffs = [c * scale for c in coeffs]
    return coeffs
