from fractions import Fraction

import pytest

from powersums.arithprog import APParams
from powersums.crosscheck import (
    AP_METHODS, BERNOULLI_METHODS, SWEEP_METHODS, VALUE_METHODS, CrossCheckReport, Mismatch,
    ap_by_method, bernoulli_by_method, cell_count, method_supports, powersum_by_method,
    run_all, run_ap_sweep, run_bernoulli_sweep, run_identity_sweep, run_powersum_sweep,
)
from powersums.sumexcept import InconsistencyError, VerificationError


class TestMethodDispatch:
    
    def test_value_methods_are_swept(self):
        assert set(VALUE_METHODS) <= set(SWEEP_METHODS)
    
    def test_supports(self):
        assert method_supports('oracle', 0)
        assert method_supports('series', 0)
        assert not method_supports('det', 0)
        assert method_supports('exotic', 4)
        assert not method_supports('exotic', 5)
        assert not method_supports('oracle', -1)
    
    @pytest.mark.parametrize("method", sorted(VALUE_METHODS))
    def test_every_value_method(self, method):
        for k in (2, 3, 10):
            if method_supports(method, k):
                assert powersum_by_method(method, k, 4) == sum(i ** k for i in range(1, 5))
    
    def test_golden(self):
        assert powersum_by_method('det', 10, 4) == 1108650
    
    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown"):
            powersum_by_method('abacus', 2, 2)
    
    def test_unsupported(self):
        with pytest.raises(ValueError):
            powersum_by_method('exotic', 3, 2)
        with pytest.raises(ValueError):
            powersum_by_method('det', 2, 0)
    
    @pytest.mark.parametrize("method", sorted(BERNOULLI_METHODS))
    def test_bernoulli_methods(self, method):
        assert bernoulli_by_method(method, 6) == Fraction(-691, 2730)
    
    @pytest.mark.parametrize("method", sorted(AP_METHODS))
    def test_ap_methods(self, method):
        assert ap_by_method(method, 2, APParams(1, 2, 3)) == 35
    
    def test_unknown_other_methods(self):
        with pytest.raises(ValueError):
            bernoulli_by_method('abacus', 1)
        with pytest.raises(ValueError):
            ap_by_method('abacus', 1, APParams(1, 1, 1))


class TestReport:
    
    def test_compare(self):
        report = CrossCheckReport()
        report.compare('det', 2, 3, 14, lambda: 14)
        report.compare('faa', 2, 3, 14, lambda: 15)
        assert report.checks == 2
        assert report.per_method == {'det': 1, 'faa': 1}
        assert not report.ok
        assert report.mismatches == [Mismatch('faa', 2, 3, 14, 15)]
    
    def test_errors_become_mismatches(self):
        def broken():
            raise InconsistencyError("S_2(3)", Fraction(1, 2))
        
        report = CrossCheckReport()
        report.compare('det', 2, 3, 14, broken)
        assert report.mismatches[0].got.startswith("error: ")
    
    def test_raise(self):
        report = CrossCheckReport()
        report.raise_for_mismatches()
        report.compare('faa', 2, 3, 14, lambda: 15)
        with pytest.raises(VerificationError) as exc:
            report.raise_for_mismatches()
        assert "1 mismatch(es)" in str(exc.value)
        assert "faa at k=2, n=3: expected 14, got 15" in str(exc.value)
    
    def test_mismatch_without_n(self):
        assert str(Mismatch('bernoulli-det', 6, None, 1, 2)) == "bernoulli-det at k=6: expected 1, got 2"


class TestSweeps:
    
    def test_small(self):
        ticks = []
        report = run_all(2, 2, progress=lambda: ticks.append(1))
        assert report.ok, [str(m) for m in report.mismatches]
        assert report.checks > 0
        assert len(ticks) == cell_count(2, 2)
    
    def test_invalid_bounds(self):
        with pytest.raises(ValueError):
            run_all(0, 3)
    
    def test_parts(self):
        assert run_powersum_sweep(4, 5).ok
        assert run_bernoulli_sweep(5).ok
        assert run_identity_sweep(3, 4).ok
        assert run_ap_sweep(3, 4).ok
    
    @pytest.mark.slow
    def test_full_grid(self):
        report = run_powersum_sweep(10, 20)
        assert report.ok, [str(m) for m in report.mismatches]
    
    @pytest.mark.slow
    def test_progressions(self):
        assert run_ap_sweep(8, 10).ok
    
    @pytest.mark.slow
    def test_doubling(self):
        assert run_identity_sweep(8, 15).ok
    
    @pytest.mark.superslow
    def test_everything(self):
        assert run_all(10, 20).ok


class TestProgressionGridBounds:
    
    def test_verify_covers_acceptance_grid(self):
        report = run_ap_sweep(1, 1)
        labels = set(report.per_method)
        assert "ap-met9[a=4,d=4]" in labels
        assert "ap-series[a=0,d=4]" in labels
        assert report.checks == 2 * 5 * 4 * 2
