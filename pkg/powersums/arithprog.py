# --------------------------------------------------------------------
# PowerSums :: Modules :: Arithmetic progressions
# --------------------------------------------------------------------
"""
Power sums over an arithmetic progression,

    S_k^{a,d}(n) = a^k + (a+d)^k + ... + (a+(n-1)d)^k,

by direct summation, by dividing exponential series, by the closed k = 1
form in N_{a,d} = n + a/d - 1/2, and by differentiating the polynomial
Q_n^{a,d}(x; k) at 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core_math import as_integer, binomial
from .linalg import fit_by_determinants
from .poly import Polynomial
from .series import series_div, series_exp
from .sumexcept import InconsistencyError


__all__ = [
    'APParams', 'APFaulhaberK1', 'ap_oracle', 'ap_series', 'ap_faulhaber_k1',
    'a_coefficient', 't_polynomial', 'q_ap_polynomial', 'ap_met9', 'odd_power_fit',
]


@dataclass(frozen=True)
class APParams:
    a: int
    d: int
    n: int

    def __post_init__(self):
        if self.a < 0:
            raise ValueError("initial term a must be >= 0, got {}".format(self.a))
        if self.d < 1:
            raise ValueError("common difference d must be >= 1, got {}".format(self.d))
        if self.n < 1:
            raise ValueError("term count n must be >= 1, got {}".format(self.n))

    @property
    def last(self) -> int:
        return self.a + (self.n - 1) * self.d

    @property
    def terms(self) -> range:
        return range(self.a, self.last + 1, self.d)


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError("power index must be >= 0, got {}".format(k))


def ap_oracle(k: int, p: APParams) -> int:
    _check_k(k)
    return sum(term ** k for term in p.terms)


def ap_series(k: int, p: APParams) -> int:
    """ k! [x^k] of (e^{(a+nd)x} - e^{ax}) / (e^{dx} - 1) """
    _check_k(k)
    K = k + 1
    numerator = series_exp(p.a + p.n * p.d, K) - series_exp(p.a, K)
    denominator = series_exp(p.d, K) - 1
    quotient = series_div(numerator, denominator)
    return as_integer(quotient[k] * factorial(k), "S_{}^{{{},{}}}({}) by series".format(k, p.a, p.d, p.n))


@dataclass(frozen=True)
class APFaulhaberK1:
    c10: Fraction
    c11: Fraction
    N: Fraction

    @property
    def value(self) -> Fraction:
        return self.c10 + self.c11 * self.N ** 2


def ap_faulhaber_k1(p: APParams) -> APFaulhaberK1:
    """ S_1^{a,d} = c_{1,0} + c_{1,1} N_{a,d}^2 """
    a, d = Fraction(p.a), Fraction(p.d)
    return APFaulhaberK1(
        c10=a / 2 - a * a / (2 * d) - d / 8,
        c11=d / 2,
        N=p.n + a / d - Fraction(1, 2),
    )


######################################################################
# The Q_n^{a,d} polynomial


def a_coefficient(k: int, j: int, a, d) -> Fraction:
    """ A_{k,j}(a, d) = sum_{i=0..j} (-1)^i [(j+1-i) d - a]^k C(k+1, i) """
    return Fraction(sum(
        (-1) ** i * ((j + 1 - i) * d - a) ** k * binomial(k + 1, i)
        for i in range(j + 1)
    ))


def t_polynomial(k: int, a, d) -> Polynomial:
    """ T_k(x, a, d) = sum_{j=0..k} A_{k,j}(a, d) x^j """
    _check_k(k)
    return Polynomial(a_coefficient(k, j, a, d) for j in range(k + 1))


def q_ap_polynomial(k: int, p: APParams) -> Polynomial:
    """
        Q_n^{a,d}(x; k) = a^k x (x-1)^{k+1}
                          + x^{n+1} T_k(x, a + d(n-1), -d)
                          - x^2 T_k(x, a, -d)
    """
    _check_k(k)
    head = Polynomial([0, 1]) * Polynomial([-1, 1]) ** (k + 1) * p.a ** k
    upper = t_polynomial(k, p.last, -p.d).shift(p.n + 1)
    lower = t_polynomial(k, p.a, -p.d).shift(2)
    return head + upper - lower


def ap_met9(k: int, p: APParams) -> int:
    """ The (k+1)-th derivative of Q_n^{a,d}(x; k) at 1, over (k+1)! """
    q = q_ap_polynomial(k, p)
    value = q.derivative(k + 1)(1) / factorial(k + 1)
    return as_integer(value, "S_{}^{{{},{}}}({}) from Q_n^{{a,d}}".format(k, p.a, p.d, p.n))


######################################################################
# Odd numbers


FIT_VALIDATION_POINTS = 5


def odd_power_fit(k: int) -> tuple[Fraction, ...]:
    """
        d_{k,1..k} with 1^{2k-1} + 3^{2k-1} + ... + (2n-1)^{2k-1} = sum_r d_{k,r} n^{2r},
        fitted on n = 1..k and checked on the next few n.
    """
    if k < 1:
        raise ValueError("order k must be >= 1, got {}".format(k))
    label = "odd numbers to the power {}".format(2 * k - 1)

    def oracle(n: int) -> int:
        return ap_oracle(2 * k - 1, APParams(1, 2, n))

    rows = [[n ** (2 * r) for r in range(1, k + 1)] for n in range(1, k + 1)]
    coeffs = fit_by_determinants(label, rows, [oracle(n) for n in range(1, k + 1)])
    for n in range(k + 1, k + 1 + FIT_VALIDATION_POINTS):
        fitted = sum(c * n ** (2 * r) for r, c in enumerate(coeffs, 1))
        if fitted != oracle(n):
            raise InconsistencyError("{} at n={}".format(label, n), fitted)
    return coeffs
