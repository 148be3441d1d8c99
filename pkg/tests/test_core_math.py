from fractions import Fraction
from math import factorial

import pytest

from powersums.core_math import (
    PartitionTuple, as_integer, as_rational, binomial, eulerian_number,
    eulerian_polynomial, falling_factorial, half_cosine_weight,
    partition_tuples, stirling2,
)
from powersums.poly import Polynomial
from powersums.sumexcept import InconsistencyError


class TestScalars:
    
    def test_as_rational_promotes_int(self):
        assert as_rational(3) == Fraction(3)
        assert isinstance(as_rational(3), Fraction)
    
    def test_as_rational_refuses_float(self):
        with pytest.raises(TypeError):
            as_rational(0.5)
    
    def test_as_integer(self):
        assert as_integer(Fraction(10, 2)) == 5
    
    def test_as_integer_rejects_fraction(self):
        with pytest.raises(InconsistencyError) as excinfo:
            as_integer(Fraction(1, 3), "S_1(1)")
        assert "S_1(1)" in str(excinfo.value)


class TestCounting:
    
    def test_binomial(self):
        assert binomial(11, 6) == 462
        assert binomial(5, 7) == 0
        assert binomial(5, -1) == 0
    
    def test_binomial_pascal(self):
        for n in range(1, 65):
            for k in range(0, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
                assert binomial(n, k) == binomial(n, n - k)
        assert sum(binomial(64, k) for k in range(65)) == 2 ** 64
    
    def test_binomial_negative_upper(self):
        # C(-1, k) = (-1)^k
        assert [binomial(-1, k) for k in range(4)] == [1, -1, 1, -1]
        assert binomial(-2, 2) == 3
    
    def test_falling_factorial(self):
        assert falling_factorial(5, 3) == 60
        assert falling_factorial(5, 0) == 1
        assert falling_factorial(Fraction(1, 2), 2) == Fraction(-1, 4)
    
    def test_falling_factorial_polynomial(self):
        x = Polynomial.x()
        assert falling_factorial(x, 2) == Polynomial([0, -1, 1])
    
    def test_falling_factorial_negative(self):
        with pytest.raises(ValueError):
            falling_factorial(3, -1)
    
    def test_stirling2(self):
        assert [stirling2(4, j) for j in range(5)] == [0, 1, 7, 6, 1]
        assert stirling2(0, 0) == 1
        assert stirling2(3, 5) == 0
    
    def test_stirling2_row_sums_are_bell_numbers(self):
        assert [sum(stirling2(k, j) for j in range(k + 1)) for k in range(13)] == [
            1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ]
    
    def test_eulerian(self):
        assert [eulerian_number(3, i) for i in range(4)] == [0, 1, 4, 1]
        assert [eulerian_number(4, i) for i in range(5)] == [0, 1, 11, 11, 1]
    
    def test_eulerian_row_sums_are_factorials(self):
        for j in range(1, 11):
            assert sum(eulerian_number(j, i) for i in range(j + 1)) == factorial(j)
    
    def test_eulerian_symmetry(self):
        for j in range(1, 11):
            assert [eulerian_number(j, i) for i in range(1, j + 1)] == [eulerian_number(j, j + 1 - i) for i in range(1, j + 1)]
    
    def test_eulerian_polynomial(self):
        assert eulerian_polynomial(0) == Polynomial([1])
        assert eulerian_polynomial(2) == Polynomial([0, 1, 1])


def _partition_counts(limit):
    """ p(0..limit) by the coin-change recurrence over part sizes. """
    counts = [1] + [0] * limit
    for part in range(1, limit + 1):
        for total in range(part, limit + 1):
            counts[total] += counts[total - part]
    return counts


class TestPartitions:
    
    def test_counts_match_recurrence(self):
        expected = _partition_counts(20)
        for k in range(1, 21):
            assert len(partition_tuples(k)) == expected[k]
        assert expected[20] == 627
    
    def test_counts(self):
        assert [len(partition_tuples(k)) for k in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]
    
    def test_each_is_a_partition(self):
        for k in range(1, 21):
            for pt in partition_tuples(k):
                assert pt.order == k
                assert sum(r * b for r, b in enumerate(pt, 1)) == k
    
    def test_sorted_and_distinct(self):
        parts = [pt.parts for pt in partition_tuples(6)]
        assert parts == sorted(parts)
        assert len(set(parts)) == len(parts)
    
    def test_block_count(self):
        assert PartitionTuple((2, 1, 0, 0)).m == 3
    
    def test_invalid_tuple(self):
        with pytest.raises(ValueError):
            PartitionTuple((1, 1))
    
    def test_invalid_order(self):
        with pytest.raises(ValueError):
            partition_tuples(0)
    
    def test_half_cosine_weight(self):
        (single,) = partition_tuples(1)
        assert half_cosine_weight(single) == Fraction(1, 4)
