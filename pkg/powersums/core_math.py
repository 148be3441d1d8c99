# --------------------------------------------------------------------
# PowerSums :: Modules :: Core arithmetic and combinatorics
# --------------------------------------------------------------------
"""
Exact scalars and the combinatorial tables every other module leans on.

Rationals are plain `fractions.Fraction` values: always reduced, sign on
the numerator, zero as 0/1. Integers are Python ints, bounded only by
memory.

Tables (Stirling, Eulerian) are built a row at a time and memoized with
`functools.lru_cache`; rows are tuples, so a cached row can be shared
between threads without copying.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, factorial, prod
import operator
import typing

from .sumexcept import InconsistencyError

if typing.TYPE_CHECKING:
    from typing import Union


__all__ = [
    'Rational', 'as_rational', 'as_integer',
    'binomial', 'falling_factorial', 'stirling2', 'eulerian_number',
    'PartitionTuple', 'partition_tuples', 'half_cosine_weight',
]

Rational = Fraction


def as_rational(value) -> Fraction:
    """ Promote an int (or anything Fraction accepts exactly) to a Fraction. """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point value {!r} has no place in exact arithmetic".format(value))
    return Fraction(value)


def as_integer(value, what: str = "power sum") -> int:
    """
        Demote an integer-valued Rational to int; anything else means one
        of the exact routes is broken.
    """
    value = as_rational(value)
    if value.denominator != 1:
        raise InconsistencyError(what, value)
    return value.numerator


######################################################################
# Elementary counting


def binomial(n: int, k: int) -> int:
    """
        C(n, k) for integer n >= 0 and any integer k; zero outside 0 <= k <= n.
        Negative n uses the upper-index extension C(n, k) = (-1)^k C(k-n-1, k).
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def falling_factorial(x: Union[int, Fraction], m: int):
    """ x(x-1)...(x-m+1); 1 when m == 0. Works for anything with - and *. """
    if m < 0:
        raise ValueError("falling factorial needs m >= 0, got {}".format(m))
    result = reduce(operator.mul, (x - i for i in range(m)), 1)
    if isinstance(result, (int, Fraction)):
        return as_rational(result)
    return result


@lru_cache(maxsize=None)
def _stirling2_row(k: int) -> tuple[int, ...]:
    """ Row k of the Stirling triangle of the second kind, j = 0..k. """
    if k == 0:
        return (1,)
    prev = _stirling2_row(k - 1)
    row = [0] * (k + 1)
    for j in range(1, k + 1):
        left = prev[j - 1]
        right = prev[j] if j < len(prev) else 0
        row[j] = left + j * right
    return tuple(row)


def stirling2(k: int, j: int) -> int:
    """ {k, j}: partitions of a k-set into j non-empty blocks. """
    if k < 0 or j < 0 or j > k:
        return 0
    return _stirling2_row(k)[j]


@lru_cache(maxsize=None)
def _eulerian_row(j: int) -> tuple[int, ...]:
    """
        Row j of the Eulerian triangle in the A_j(x) = sum <j,i> x^i
        indexing, i = 0..j, with <0,0> = 1 and <j,0> = 0 for j >= 1.
    """
    if j == 0:
        return (1,)
    prev = _eulerian_row(j - 1)
    row = [0] * (j + 1)
    for i in range(1, j + 1):
        same = prev[i] if i < len(prev) else 0
        lower = prev[i - 1]
        row[i] = i * same + (j - i + 1) * lower
    return tuple(row)


def eulerian_number(j: int, i: int) -> int:
    """ <j, i>, indexed so that A_1(x) = x and A_2(x) = x + x^2. """
    if j < 0 or i < 0 or i > j:
        return 0
    return _eulerian_row(j)[i]


def eulerian_polynomial(j: int):
    """ A_j(x) as a Polynomial; A_0(x) = 1. """
    from .poly import Polynomial
    if j < 0:
        raise ValueError("Eulerian polynomial index must be >= 0, got {}".format(j))
    return Polynomial(_eulerian_row(j))


######################################################################
# Partition tuples


@dataclass(frozen=True)
class PartitionTuple:
    """
        (b_1, ..., b_k) with b_1 + 2 b_2 + ... + k b_k = k: the multiplicity
        form of an integer partition of k, as Faa di Bruno's formula wants it.
    """
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.parts):
            raise ValueError("negative multiplicity in {}".format(self.parts))
        if sum(r * b for r, b in enumerate(self.parts, 1)) != len(self.parts):
            raise ValueError("{} is not a partition of {}".format(self.parts, len(self.parts)))

    @property
    def order(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        """ Number of blocks, b_1 + ... + b_k. """
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)


def _parts_largest_first(remaining: int, largest: int):
    """ Yields partitions of 'remaining' as non-increasing lists of parts <= largest. """
    if remaining == 0:
        yield []
        return
    for part in range(min(remaining, largest), 0, -1):
        for rest in _parts_largest_first(remaining - part, part):
            yield [part] + rest


@lru_cache(maxsize=None)
def partition_tuples(k: int) -> tuple[PartitionTuple, ...]:
    """
        Every PartitionTuple of order k, sorted lexicographically by parts.
        The count is p(k), the number of integer partitions of k.
    """
    if k < 1:
        raise ValueError("partition_tuples needs k >= 1, got {}".format(k))
    tuples = []
    for parts in _parts_largest_first(k, k):
        counts = [0] * k
        for part in parts:
            counts[part - 1] += 1
        tuples.append(tuple(counts))
    return tuple(PartitionTuple(parts) for parts in sorted(tuples))


def half_cosine_weight(pt: PartitionTuple) -> Fraction:
    """
        (2k)! / (b_1! ... b_k!) * prod_r (4^r (2r)!)^(-b_r)

        The Faa di Bruno weight of one partition when the inner function is
        cos(x/2): only its even derivatives survive at 0, and the r-th of
        those contributes 1/4^r up to sign.
    """
    k = pt.order
    denominator = prod(factorial(b) for b in pt.parts)
    denominator *= prod((4 ** r * factorial(2 * r)) ** b for r, b in enumerate(pt.parts, 1))
    return Fraction(factorial(2 * k), denominator)
