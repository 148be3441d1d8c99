# --------------------------------------------------------------------
# PowerSums :: Modules :: Dense polynomials
# --------------------------------------------------------------------
"""
Dense univariate polynomials over the rationals.

A Polynomial is a tuple of Fractions, lowest degree first, with no
trailing zeros: [1, 10, 5] is 1 + 10x + 5x^2 and the zero polynomial is
the empty tuple. The indeterminate has no name; whether it stands for x,
N, S_1, j or n is up to the caller.

Evaluation is Horner's rule over whatever supports + and *, so a
Polynomial can be evaluated at a Fraction, at another Polynomial
(composition) or at a TruncatedSeries.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
import typing

from .core_math import as_rational

if typing.TYPE_CHECKING:
    from typing import Any, Iterable, Union
    Scalar = Union[int, Fraction]


__all__ = [
    'Polynomial', 'poly_derivative', 'poly_eval', 'poly_xddx',
    'geometric_polynomial',
]


def _normalize(coeffs) -> tuple[Fraction, ...]:
    """ Strip trailing zero coefficients. """
    coeffs = [as_rational(c) for c in coeffs]
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """
        Immutable dense polynomial with rational coefficients.

        Supports +, -, * and ** with other Polynomials and with scalars,
        equality, hashing, indexing by power (zero past the degree) and
        evaluation by calling the polynomial.
    """
    __slots__ = ('coeffs',)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        object.__setattr__(self, 'coeffs', _normalize(coeffs))

    def __setattr__(self, key, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> Polynomial:
        """ coeff * x^power """
        if power < 0:
            raise ValueError("monomial power must be >= 0, got {}".format(power))
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls([value])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    ##################################################################
    # Inspection

    @property
    def degree(self) -> int:
        """ Degree; -1 for the zero polynomial. """
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, power: int) -> Fraction:
        if power < 0:
            raise IndexError("negative power {}".format(power))
        return self.coeffs[power] if power < len(self.coeffs) else Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def has_parity(self, parity: int) -> bool:
        """ True when every nonzero coefficient sits at a power congruent to parity mod 2. """
        return all(not c for power, c in enumerate(self.coeffs) if power % 2 != parity % 2)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _normalize([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Polynomial([{}])".format(", ".join(str(c) for c in self.coeffs))

    ##################################################################
    # Arithmetic

    @staticmethod
    def _lift(other: Any) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other: Any) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Any) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other: Any) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: Any) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power needs an integer exponent >= 0, got {!r}".format(exponent))
        result, base = Polynomial([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, power: int) -> Polynomial:
        """ Multiply by x^power. """
        if not self.coeffs:
            return self
        return Polynomial([0] * power + list(self.coeffs))

    def divide_by_x(self, power: int = 1) -> Polynomial:
        """ Exact division by x^power; the low coefficients must be zero. """
        if any(self[i] for i in range(power)):
            raise ValueError("{!r} is not divisible by x^{}".format(self, power))
        return Polynomial(self.coeffs[power:])

    ##################################################################
    # Calculus

    def __call__(self, value: Any) -> Any:
        """ Horner evaluation; value may be a scalar, a Polynomial or a series. """
        if not self.coeffs:
            return Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        result = self.coeffs[-1]
        for coeff in reversed(self.coeffs[:-1]):
            result = value * result + coeff
        if isinstance(value, (int, Fraction)):
            return as_rational(result)
        if len(self.coeffs) == 1:
            return value * 0 + result
        return result

    def derivative(self, times: int = 1) -> Polynomial:
        """ The times-th formal derivative. """
        if times < 0:
            raise ValueError("derivative order must be >= 0, got {}".format(times))
        coeffs = list(self.coeffs)
        for _ in range(times):
            coeffs = [power * c for power, c in enumerate(coeffs) if power]
            if not coeffs:
                break
        return Polynomial(coeffs)

    def xddx(self, times: int = 1) -> Polynomial:
        """ x * d/dx applied times times: the coefficient of x^r gains r^times. """
        if times < 0:
            raise ValueError("operator power must be >= 0, got {}".format(times))
        return Polynomial(power ** times * c for power, c in enumerate(self.coeffs))


def poly_derivative(p: Polynomial, times: int) -> Polynomial:
    return p.derivative(times)


def poly_eval(p: Polynomial, x0: Scalar) -> Fraction:
    return p(as_rational(x0))


def poly_xddx(p: Polynomial, times: int) -> Polynomial:
    return p.xddx(times)


def geometric_polynomial(n: int) -> Polynomial:
    """ 1 + x + ... + x^n """
    if n < 0:
        raise ValueError("geometric polynomial needs n >= 0, got {}".format(n))
    return Polynomial([1] * (n + 1))
