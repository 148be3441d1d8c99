from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powersums.core_math import stirling2
from powersums.poly import (
    Polynomial, geometric_polynomial, poly_derivative, poly_eval, poly_xddx,
)


class TestPolynomial:
    
    def test_trailing_zeros_dropped(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.coeffs == (1, 2)
        assert p.degree == 1
    
    def test_zero(self):
        zero = Polynomial()
        assert zero.degree == -1
        assert zero.is_zero()
        assert not zero
        assert zero == 0
    
    def test_index_past_degree(self):
        assert Polynomial([1, 2])[5] == 0
    
    def test_immutable(self):
        with pytest.raises(AttributeError):
            Polynomial([1]).coeffs = (2,)
    
    def test_arithmetic(self):
        p, q = Polynomial([1, 1]), Polynomial([-1, 1])
        assert p * q == Polynomial([-1, 0, 1])
        assert p + q == Polynomial([0, 2])
        assert p - q == 2
        assert 3 - p == Polynomial([2, -1])
        assert p * Fraction(1, 2) == Polynomial([Fraction(1, 2), Fraction(1, 2)])
        assert p ** 3 == Polynomial([1, 3, 3, 1])
        assert p ** 0 == 1
    
    def test_bad_power(self):
        with pytest.raises(ValueError):
            Polynomial([1, 1]) ** -1
    
    def test_monomial_and_shift(self):
        assert Polynomial.monomial(3, 2) == Polynomial([0, 0, 0, 2])
        assert Polynomial([1, 1]).shift(2) == Polynomial([0, 0, 1, 1])
    
    def test_divide_by_x(self):
        assert Polynomial([0, 0, 3, 4]).divide_by_x(2) == Polynomial([3, 4])
        with pytest.raises(ValueError):
            Polynomial([1, 1]).divide_by_x()
    
    def test_evaluate(self):
        p = Polynomial([1, -3, 2])
        assert p(2) == 3
        assert p(Fraction(1, 2)) == 0
        assert poly_eval(p, 1) == 0
    
    def test_compose(self):
        p = Polynomial([0, 0, 1])
        assert p(Polynomial([1, 1])) == Polynomial([1, 2, 1])
    
    def test_derivative(self):
        p = Polynomial([5, 3, 0, 1])
        assert p.derivative() == Polynomial([3, 0, 3])
        assert poly_derivative(p, 3) == 6
        assert p.derivative(4) == 0
        assert p.derivative(0) == p
    
    def test_xddx(self):
        g = geometric_polynomial(3)
        assert g.xddx(2) == Polynomial([0, 1, 4, 9])
        assert poly_xddx(g, 2)(1) == 14
    
    def test_parity(self):
        assert Polynomial([0, 1, 0, 5]).has_parity(1)
        assert not Polynomial([1, 1]).has_parity(0)
    
    def test_hash_matches_equality(self):
        assert hash(Polynomial([1, 2])) == hash(Polynomial([1, 2, 0]))


polynomials = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6), max_size=7).map(Polynomial)


class TestCalculusIdentities:
    
    @given(polynomials, st.integers(0, 6))
    @settings(max_examples=40, deadline=None)
    def test_xddx_is_iterated_operator(self, p, k):
        q = p
        for _ in range(k):
            q = Polynomial.x() * q.derivative()
        assert p.xddx(k) == q
    
    @given(polynomials, st.integers(0, 6))
    @settings(max_examples=40, deadline=None)
    def test_xddx_stirling_expansion(self, p, k):
        # (x d/dx)^k = sum_j {k, j} x^j (d/dx)^j
        expanded = sum(
            (Polynomial.monomial(j, stirling2(k, j)) * p.derivative(j) for j in range(k + 1)),
            Polynomial(),
        )
        assert p.xddx(k) == expanded
    
    @given(polynomials, polynomials)
    @settings(max_examples=40, deadline=None)
    def test_product_rule(self, p, q):
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()
    
    @given(polynomials, polynomials, st.integers(1, 4))
    @settings(max_examples=30, deadline=None)
    def test_derivative_is_linear(self, p, q, times):
        assert (p + q).derivative(times) == p.derivative(times) + q.derivative(times)
