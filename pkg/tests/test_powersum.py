from fractions import Fraction

import pytest

from powersums import powersum
from powersums.poly import Polynomial
from powersums.powersum import (
    Basis, Factor, Parity, QForm, chen_recurrences, doubling_identities,
    doubling_terms, eval_faulhaber, exotic_powersum, faulhaber_from_rows,
    faulhaber_poly, faulhaber_rows, pk_polynomial, powersum_oracle,
    powersum_via_operator, powersum_via_q, powersum_via_stirling, q_polynomial,
    remark2_ratio, remark5_fit, theorem1_solve, verify_identities,
)


def _S(k, n):
    return powersum_oracle(k, n)


class TestOracle:
    
    def test_values(self):
        assert _S(10, 4) == 1108650
        assert _S(0, 7) == 7
        assert _S(3, 10) == 3025
    
    def test_ranges(self):
        with pytest.raises(ValueError):
            powersum_oracle(-1, 3)
        with pytest.raises(ValueError):
            powersum_oracle(2, 0)


class TestForwardSubstitution:
    
    @pytest.mark.parametrize("parity", list(Parity))
    def test_matches_oracle(self, parity):
        for n in range(1, 11):
            solved = theorem1_solve(parity, 6, n)
            offset = 0 if parity is Parity.EVEN else 1
            assert solved == [_S(2 * i - offset, n) for i in range(1, 7)]
    
    def test_accepts_strings(self):
        assert theorem1_solve('odd', 2, 3) == [6, 36]


class TestFaulhaberPolynomials:
    
    def test_small_cases(self):
        assert faulhaber_poly(Parity.ODD, 1).body == Polynomial([Fraction(-1, 8), 0, Fraction(1, 2)])
        assert faulhaber_poly(Parity.EVEN, 1).body == Polynomial([0, Fraction(-1, 12), 0, Fraction(1, 3)])
    
    def test_s9_in_n(self):
        fp = faulhaber_poly(Parity.ODD, 5, Basis.N)
        assert fp.index == 9
        assert fp.body == Polynomial([
            Fraction(-31, 2048), 0, Fraction(381, 2560), 0, Fraction(-31, 64), 0,
            Fraction(49, 80), 0, Fraction(-3, 8), 0, Fraction(1, 10),
        ])
    
    def test_s10_in_n(self):
        fp = faulhaber_poly(Parity.EVEN, 5, Basis.N)
        assert fp.index == 10
        assert fp.body == Polynomial([
            0, Fraction(-2555, 33792), 0, Fraction(127, 256), 0, Fraction(-31, 32),
            0, Fraction(7, 8), 0, Fraction(-5, 12), 0, Fraction(1, 11),
        ])
        assert eval_faulhaber(fp, 4) == 1108650
    
    def test_s9_in_s1(self):
        fp = faulhaber_poly(Parity.ODD, 5, Basis.S1)
        assert fp.factor is Factor.S1_SQUARED
        assert fp.body == Polynomial([Fraction(-3, 5), Fraction(12, 5), -4, Fraction(16, 5)])
    
    def test_s10_in_s1(self):
        fp = faulhaber_poly(Parity.EVEN, 5, Basis.S1)
        assert fp.factor is Factor.S2
        assert fp.body == Polynomial([
            Fraction(5, 11), Fraction(-30, 11), Fraction(68, 11), Fraction(-80, 11), Fraction(48, 11),
        ])
    
    def test_s1_basis_edge_cases(self):
        s1 = faulhaber_poly(Parity.ODD, 1, Basis.S1)
        assert s1.factor is Factor.ONE
        assert s1.body == Polynomial([0, 1])
        assert faulhaber_poly(Parity.ODD, 2, Basis.S1).body == 1
        assert faulhaber_poly(Parity.EVEN, 1, Basis.S1).body == 1
        assert faulhaber_poly(Parity.EVEN, 2, Basis.S1).body == Polynomial([Fraction(-1, 5), Fraction(6, 5)])
    
    @pytest.mark.parametrize("basis", list(Basis))
    @pytest.mark.parametrize("parity", list(Parity))
    def test_evaluation_matches_oracle(self, parity, basis):
        for k in range(1, 7):
            fp = faulhaber_poly(parity, k, basis)
            for n in range(0, 9):
                expected = _S(fp.index, n) if n else 0
                assert eval_faulhaber(fp, n) == expected
    
    def test_parity_in_n(self):
        for k in range(1, 11):
            assert faulhaber_poly(Parity.EVEN, k).body.has_parity(1)
            assert faulhaber_poly(Parity.ODD, k).body.has_parity(0)
    
    def test_odd_derivative_vanishes_at_zero(self):
        for k in range(2, 11):
            body = faulhaber_poly(Parity.ODD, k).body
            assert body.derivative()(Fraction(1, 2)) == 0
    
    def test_rows(self):
        assert faulhaber_rows(Parity.EVEN, 5)[4][2] == 462
        assert faulhaber_rows(Parity.ODD, 1) == [[]]
    
    def test_rows_shape_checked(self):
        with pytest.raises(ValueError):
            faulhaber_from_rows(Parity.EVEN, 3, [[1, 2]], Basis.N)
    
    def test_negative_n(self):
        with pytest.raises(ValueError):
            eval_faulhaber(faulhaber_poly(Parity.EVEN, 1), -1)


class TestMisprintedEntry:
    """ The S_10 determinant printed with 463 where C(11, 6) = 462 belongs. """
    
    def test_printed_entry_breaks_s10(self):
        rows = faulhaber_rows(Parity.EVEN, 5)
        misprinted = [list(row) for row in rows]
        misprinted[4][2] = 463
        good = faulhaber_from_rows(Parity.EVEN, 5, rows)
        bad = faulhaber_from_rows(Parity.EVEN, 5, misprinted)
        assert bad.body != good.body
        assert any(eval_faulhaber(bad, n) != _S(10, n) for n in range(1, 6))
    
    def test_correct_entry_reproduces_s10(self):
        fp = faulhaber_from_rows(Parity.EVEN, 5, faulhaber_rows(Parity.EVEN, 5))
        assert all(eval_faulhaber(fp, n) == _S(10, n) for n in range(1, 6))


class TestOperatorRoutes:
    
    @pytest.mark.parametrize("form", list(QForm))
    def test_q_polynomial_display(self, form):
        assert q_polynomial(2, 3, form) == Polynomial([0, 1, 1, 0, -16, 23, -9])
    
    def test_q_forms_agree(self):
        for k in range(1, 6):
            for n in range(1, 6):
                assert q_polynomial(k, n, QForm.STIRLING) == q_polynomial(k, n, QForm.EULERIAN)
    
    def test_q_degree(self):
        assert q_polynomial(3, 4).degree == 4 + 3 + 1
    
    @pytest.mark.parametrize("route", [
        powersum_via_operator,
        powersum_via_stirling,
        powersum_via_q,
        lambda k, n: powersum_via_q(k, n, QForm.STIRLING),
    ])
    def test_routes(self, route):
        for k in range(1, 8):
            for n in range(1, 8):
                assert route(k, n) == _S(k, n)


class TestAlternatingSums:
    
    def test_small_pk(self):
        assert pk_polynomial(1) == Polynomial([0, 1])
        assert pk_polynomial(2) == Polynomial([0, -1, 3])
    
    def test_p5(self):
        assert pk_polynomial(5) == Polynomial([0, 496, -2370, 4095, -3150, 945])
    
    def test_pk_structure(self):
        for k in range(1, 9):
            pk = pk_polynomial(k)
            assert pk.degree == k
            assert pk[0] == 0
            assert pk(1) == 2 ** (k - 1)
    
    def test_exotic(self):
        for k in range(1, 7):
            for n in range(1, 10):
                assert exotic_powersum(k, n) == _S(2 * k, n)


class TestDoubling:
    
    def test_terms(self):
        assert doubling_terms(1) == []
        assert doubling_terms(2) == [(6, 1, 2)]
    
    def test_identities(self):
        for k in range(1, 6):
            for n in range(1, 8):
                assert doubling_identities(k, n) == (_S(2 * k - 1, 2 * n),) * 3


class TestIdentities:
    
    @pytest.mark.parametrize("n", range(1, 51))
    def test_printed_ratio(self, n):
        even = 9 * _S(2, n) + 126 * _S(4, n) + 336 * _S(6, n) + 144 * _S(8, n)
        odd = _S(1, n) + 28 * _S(3, n) + 112 * _S(5, n) + 64 * _S(7, n)
        assert Fraction(even, odd) == 2 * n + 1
    
    def test_ratio_is_n_plus_half(self):
        for k in range(1, 7):
            for n in range(1, 8):
                assert remark2_ratio(k, n) == Fraction(2 * n + 1, 2)
    
    def test_chen(self):
        for k in range(1, 6):
            for n in range(1, 6):
                chen = chen_recurrences(k, n)
                assert chen.evenLeft == chen.evenRight
                assert chen.oddLeft == chen.oddRight
    
    def test_fit_sums_to_four(self):
        for k in range(1, 7):
            assert sum(remark5_fit(k)) == 4
    
    def test_fit_k1(self):
        assert remark5_fit(1) == (4,)
    
    def test_verify_identities(self):
        report = verify_identities(3, 4)
        assert report.ok
        assert not report.failures
        assert {check.name for check in report.checks} == {
            'ratio', 'chen-even', 'chen-odd', 'fitted-recurrence', 'fitted-sum',
        }
    
    def test_verify_without_fit(self):
        assert len(verify_identities(2, 2, fit=False).checks) == 3
    
    def test_constants(self):
        assert powersum.delta_constant(1) == Fraction(1, 12)
        assert powersum.omega_constant(2) == Fraction(1, 128)
        assert powersum.lambda_constant(1) == Fraction(1, 8)
