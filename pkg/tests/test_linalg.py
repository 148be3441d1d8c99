from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from powersums.linalg import ExactMatrix, determinant, fit_by_determinants
from powersums.sumexcept import SingularSystemError


def _hilbert(n):
    return ExactMatrix.of([[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)])


def _laplace(m):
    """ Cofactor expansion along the first row. """
    if m.dimension == 1:
        return m[0, 0]
    return sum((-1) ** j * m[0, j] * _laplace(m.minor(0, j)) for j in range(m.dimension) if m[0, j])


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def matrices(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    rows = draw(st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n))
    return ExactMatrix.of(rows)


class TestExactMatrix:
    
    def test_square_only(self):
        with pytest.raises(ValueError):
            ExactMatrix.of([[1, 2]])
    
    def test_not_empty(self):
        with pytest.raises(ValueError):
            ExactMatrix.of([])
    
    def test_with_entry_copies(self):
        m = ExactMatrix.of([[1, 2], [3, 4]])
        changed = m.with_entry(0, 1, 5)
        assert m[0, 1] == 2
        assert changed[0, 1] == 5
    
    def test_minor(self):
        m = ExactMatrix.of([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
        assert m.minor(0, 0) == ExactMatrix.of([[5, 6], [8, 10]])


class TestDeterminant:
    
    def test_small(self):
        assert determinant(ExactMatrix.of([[1, 2], [3, 4]])) == -2
        assert ExactMatrix.of([[7]]).determinant() == 7
    
    def test_needs_pivot(self):
        assert determinant(ExactMatrix.of([[0, 1], [1, 0]])) == -1
    
    @pytest.mark.parametrize("n, expected", [
        (3, Fraction(1, 2160)),
        (5, Fraction(1, 266716800000)),
        (6, Fraction(1, 186313420339200000)),
    ])
    def test_hilbert(self, n, expected):
        assert determinant(_hilbert(n)) == expected
    
    def test_large_paths_agree(self):
        # upper triangular, so the determinant is the diagonal product
        m = ExactMatrix.of([[Fraction(i + 1, j + 2) if j >= i else 0 for j in range(7)] for i in range(7)])
        expected = Fraction(1)
        for i in range(7):
            expected *= Fraction(i + 1, i + 2)
        assert determinant(m) == expected
    
    def test_bareiss_pivot(self):
        m = ExactMatrix.of([
            [0, 2, 1, 0, 3],
            [1, 0, 0, 2, 0],
            [0, 1, 3, 0, 1],
            [2, 0, 1, 1, 0],
            [0, 0, 0, 1, 1],
        ])
        swapped = ExactMatrix.of([m.rows[1], m.rows[0], *m.rows[2:]])
        assert determinant(m) == 16
        assert determinant(swapped) == -16
    
    def test_singular(self):
        m = ExactMatrix.of([[1, 2, 3, 4, 5]] * 5)
        assert determinant(m) == 0
    
    def test_zero_column(self):
        m = ExactMatrix.of([[1, 0, 2, 3, 4], [5, 0, 6, 7, 8], [9, 0, 1, 2, 3], [4, 0, 5, 6, 7], [8, 0, 9, 1, 2]])
        assert determinant(m) == 0


class TestFit:
    
    def test_fit(self):
        # 2a + b = 5, a + 3b = 10
        assert fit_by_determinants("test", [[2, 1], [1, 3]], [5, 10]) == (1, 3)
    
    def test_singular_fit(self):
        with pytest.raises(SingularSystemError) as excinfo:
            fit_by_determinants("flat", [[1, 2], [2, 4]], [1, 2])
        assert "flat" in str(excinfo.value)
    
    def test_rhs_length(self):
        with pytest.raises(ValueError):
            fit_by_determinants("short", [[1, 0], [0, 1]], [1])


class TestDeterminantAgainstCofactors:
    
    @given(matrices())
    @settings(max_examples=60, deadline=None)
    def test_matches_laplace(self, m):
        assert determinant(m) == _laplace(m)
    
    @given(matrices(), st.data())
    @settings(max_examples=30, deadline=None)
    def test_zero_row(self, m, data):
        i = data.draw(st.integers(0, m.dimension - 1))
        rows = [list(row) for row in m.rows]
        rows[i] = [0] * m.dimension
        assert determinant(ExactMatrix.of(rows)) == 0
    
    @given(matrices(), rationals, st.data())
    @settings(max_examples=30, deadline=None)
    def test_row_scaling(self, m, factor, data):
        i = data.draw(st.integers(0, m.dimension - 1))
        rows = [list(row) for row in m.rows]
        rows[i] = [factor * v for v in rows[i]]
        assert determinant(ExactMatrix.of(rows)) == factor * determinant(m)
    
    @given(matrices(), rationals, st.data())
    @settings(max_examples=30, deadline=None)
    def test_row_addition(self, m, factor, data):
        n = m.dimension
        i, j = data.draw(st.integers(0, n - 1)), data.draw(st.integers(0, n - 1))
        if i == j:
            return
        rows = [list(row) for row in m.rows]
        rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
        assert determinant(ExactMatrix.of(rows)) == determinant(m)
