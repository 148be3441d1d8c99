# --------------------------------------------------------------------
# PowerSums :: Modules :: Truncated power series
# --------------------------------------------------------------------
"""
Truncated formal power series over the rationals.

A TruncatedSeries holds the coefficients of x^0..x^K and knows K; past K
nothing is claimed. Arithmetic results carry the smallest order of their
operands, and division by a series that vanishes at the origin to order v
gives up v more coefficients.

This is where the exponential generating function of the power sums is
evaluated, both as a sum of exponentials and as the quotient
(e^{(n+1)x} - e^x) / (e^x - 1), and where the trigonometric sums of cos rx
and sin rx are checked coefficient by coefficient.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial
import typing

from .core_math import as_integer, as_rational
from .sumexcept import NonRemovableSingularityError, SeriesZeroDivisionError

if typing.TYPE_CHECKING:
    from typing import Any, Iterable, Optional, Union


__all__ = [
    'TruncatedSeries', 'series_exp', 'series_trig', 'series_div',
    'EGFRoute', 'powersum_from_egf', 'egf_series',
    'cosine_sum_series', 'sine_sum_series', 'lemma1_series',
]


class TruncatedSeries:
    """
        c_0 + c_1 x + ... + c_K x^K + O(x^{K+1})

        Zeros are kept: len(coeffs) == order + 1 always.
    """
    __slots__ = ('coeffs', 'order')

    coeffs: tuple[Fraction, ...]
    order: int

    def __init__(self, coeffs: Iterable, order: Optional[int] = None) -> None:
        coeffs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0, got {}".format(order))
        coeffs = coeffs[:order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        object.__setattr__(self, 'coeffs', tuple(coeffs))
        object.__setattr__(self, 'order', order)

    def __setattr__(self, key, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        return cls([value], order)

    def __getitem__(self, power: int) -> Fraction:
        if power < 0 or power > self.order:
            raise IndexError("x^{} is outside a series of order {}".format(power, self.order))
        return self.coeffs[power]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __repr__(self) -> str:
        return "TruncatedSeries([{}], order={})".format(
            ", ".join(str(c) for c in self.coeffs), self.order
        )

    @property
    def valuation(self) -> Optional[int]:
        """ Lowest power with a nonzero coefficient; None for a zero series. """
        for power, coeff in enumerate(self.coeffs):
            if coeff:
                return power
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a series of order {} to {}".format(self.order, order))
        return TruncatedSeries(self.coeffs[:order + 1], order)

    def even_part(self) -> TruncatedSeries:
        return TruncatedSeries((c if not p % 2 else 0 for p, c in enumerate(self.coeffs)), self.order)

    def odd_part(self) -> TruncatedSeries:
        return TruncatedSeries((c if p % 2 else 0 for p, c in enumerate(self.coeffs)), self.order)

    ##################################################################
    # Arithmetic

    def _lift(self, other: Any) -> Union[TruncatedSeries, Any]:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], self.order)
        return NotImplemented

    def __add__(self, other: Any) -> TruncatedSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), order)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other: Any) -> TruncatedSeries:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        product = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                product[i + j] += a * other.coeffs[j]
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> TruncatedSeries:
        if isinstance(other, (int, Fraction)):
            return self * (1 / as_rational(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return series_div(self, other)


######################################################################
# Generators


def series_exp(c, K: int) -> TruncatedSeries:
    """ e^{cx} through x^K. """
    if K < 0:
        raise ValueError("series order must be >= 0, got {}".format(K))
    c = as_rational(c)
    coeffs, term = [], Fraction(1)
    for power in range(K + 1):
        coeffs.append(term)
        term = term * c / (power + 1)
    return TruncatedSeries(coeffs, K)


class TrigKind(str, Enum):
    SIN = 'sin'
    COS = 'cos'


def series_trig(kind: Union[TrigKind, str], c, K: int) -> TruncatedSeries:
    """ sin(cx) or cos(cx) through x^K. """
    kind = TrigKind(kind)
    if K < 0:
        raise ValueError("series order must be >= 0, got {}".format(K))
    c = as_rational(c)
    parity = 1 if kind is TrigKind.SIN else 0
    coeffs = [Fraction(0)] * (K + 1)
    for power in range(parity, K + 1, 2):
        sign = -1 if (power // 2) % 2 else 1
        coeffs[power] = sign * c ** power / factorial(power)
    return TruncatedSeries(coeffs, K)


######################################################################
# Division


def series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """
        num / den, lifting a removable singularity at the origin.

        If den vanishes to order v, both sides are divided by x^v first
        and the quotient is good through x^(min(orders) - v).
    """
    v = den.valuation
    if v is None:
        raise SeriesZeroDivisionError(den.order)
    order = min(num.order, den.order) - v
    numV = num.valuation
    if numV is not None and numV < v:
        raise NonRemovableSingularityError(numV, v)
    if order < 0:
        raise SeriesZeroDivisionError(den.order)

    top = num.coeffs[v:v + order + 1]
    bottom = den.coeffs[v:v + order + 1]
    lead = bottom[0]
    quotient = []
    for power in range(order + 1):
        acc = top[power] - sum(quotient[i] * bottom[power - i] for i in range(max(0, power - len(bottom) + 1), power))
        quotient.append(acc / lead)
    return TruncatedSeries(quotient, order)


######################################################################
# Power sums from the exponential generating function


class EGFRoute(str, Enum):
    DIRECT_SUM = 'direct-sum'
    MET1_DIVISION = 'met1-division'


def egf_series(n: int, K: int, route: Union[EGFRoute, str] = EGFRoute.MET1_DIVISION) -> TruncatedSeries:
    """ sum_{r=1..n} e^{rx} through x^K, either summed directly or as a quotient. """
    route = EGFRoute(route)
    if n < 1:
        raise ValueError("power sums need n >= 1, got {}".format(n))
    if route is EGFRoute.DIRECT_SUM:
        total = TruncatedSeries.constant(0, K)
        for r in range(1, n + 1):
            total = total + series_exp(r, K)
        return total
    numerator = series_exp(n + 1, K + 1) - series_exp(1, K + 1)
    denominator = series_exp(1, K + 1) - 1
    return series_div(numerator, denominator)


def powersum_from_egf(k: int, n: int, route: Union[EGFRoute, str] = EGFRoute.MET1_DIVISION) -> int:
    """ S_k(n) as k! times the x^k coefficient of the generating function. """
    if k < 0:
        raise ValueError("power index must be >= 0, got {}".format(k))
    series = egf_series(n, k, route)
    return as_integer(series[k] * factorial(k), "S_{}({}) by the {} route".format(k, n, EGFRoute(route).value))


######################################################################
# Trigonometric sums


def cosine_sum_series(n: int, K: int) -> TruncatedSeries:
    """ sum_{r=1..n} cos(rx) """
    total = TruncatedSeries.constant(0, K)
    for r in range(1, n + 1):
        total = total + series_trig(TrigKind.COS, r, K)
    return total


def sine_sum_series(n: int, K: int) -> TruncatedSeries:
    """ sum_{r=1..n} sin(rx) """
    total = TruncatedSeries.constant(0, K)
    for r in range(1, n + 1):
        total = total + series_trig(TrigKind.SIN, r, K)
    return total


def lemma1_series(n: int, order: int) -> tuple[tuple[TruncatedSeries, TruncatedSeries], tuple[TruncatedSeries, TruncatedSeries]]:
    """
        Both sides of the closed forms of the trigonometric sums, through x^order,
        with N = n + 1/2:

            sum cos(rx) = (sin(Nx) - sin(x/2)) / (2 sin(x/2))
            sum sin(rx) = (cos(x/2) - cos(Nx)) / (2 sin(x/2))

        Returns ((cos_sum, cos_closed), (sin_sum, sin_closed)).
    """
    N = Fraction(2 * n + 1, 2)
    half = Fraction(1, 2)
    K = order + 1
    twiceSinHalf = series_trig(TrigKind.SIN, half, K) * 2
    cosClosed = series_div(series_trig(TrigKind.SIN, N, K) - series_trig(TrigKind.SIN, half, K), twiceSinHalf)
    sinClosed = series_div(series_trig(TrigKind.COS, half, K) - series_trig(TrigKind.COS, N, K), twiceSinHalf)
    return (
        (cosine_sum_series(n, order), cosClosed.truncate(order)),
        (sine_sum_series(n, order), sinClosed.truncate(order)),
    )
