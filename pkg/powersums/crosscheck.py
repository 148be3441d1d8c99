# --------------------------------------------------------------------
# PowerSums :: Modules :: Cross-method checking
# --------------------------------------------------------------------
"""
Runs every route against the direct-summation oracles and collects the
cells that disagree.

Each power-sum route is registered under the name the `value` command
accepts, plus a few internal variants (the S_1 basis, the directly summed
generating function, the Stirling form of Q) that only the sweep uses.
Routes that raise PowerSumException are recorded as mismatches with the
error text in place of a value.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import typing

from . import arithprog, bernoulli, chebyshev, powersum
from .core_math import as_integer
from .powersum import Basis, Parity, QForm
from .series import EGFRoute, powersum_from_egf
from .sumexcept import PowerSumException, VerificationError

if typing.TYPE_CHECKING:
    from typing import Callable, Optional, Union
    Progress = Optional[Callable[[], None]]


__all__ = [
    'Mismatch', 'CrossCheckReport', 'VALUE_METHODS', 'SWEEP_METHODS',
    'method_supports', 'powersum_by_method', 'bernoulli_by_method', 'ap_by_method',
    'BERNOULLI_METHODS', 'AP_METHODS', 'cell_count', 'run_powersum_sweep',
    'run_bernoulli_sweep', 'run_identity_sweep', 'run_ap_sweep', 'run_all',
]


@dataclass(frozen=True)
class Mismatch:
    method: str
    k: int
    n: Optional[int]
    expected: Union[int, Fraction]
    got: Union[int, Fraction, str]

    def __str__(self) -> str:
        where = "k={}".format(self.k) if self.n is None else "k={}, n={}".format(self.k, self.n)
        return "{} at {}: expected {}, got {}".format(self.method, where, self.expected, self.got)


@dataclass
class CrossCheckReport:
    checks: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    per_method: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def compare(self, method: str, k: int, n: Optional[int], expected, compute: Callable[[], object]) -> None:
        self.checks += 1
        self.per_method[method] = self.per_method.get(method, 0) + 1
        try:
            got = compute()
        except PowerSumException as e:
            got = "error: {}".format(e)
        if got != expected:
            self.mismatches.append(Mismatch(method, k, n, expected, got))

    def raise_for_mismatches(self) -> None:
        if self.mismatches:
            raise VerificationError(self.mismatches)


######################################################################
# Power-sum routes, indexed by the power k of S_k


def _half(k: int) -> tuple[Parity, int]:
    """ The parity and order m with S_k = S_2m or S_{2m-1}. """
    if k % 2 == 0:
        return Parity.EVEN, k // 2
    return Parity.ODD, (k + 1) // 2


def _by_recurrence(k: int, n: int) -> int:
    parity, m = _half(k)
    return powersum.theorem1_solve(parity, m, n)[-1]


def _by_determinant(basis: Basis) -> Callable[[int, int], int]:
    def route(k: int, n: int) -> int:
        parity, m = _half(k)
        fp = powersum.faulhaber_poly(parity, m, basis)
        return as_integer(powersum.eval_faulhaber(fp, n), "S_{}({}) from the {} polynomial".format(k, n, basis.value))
    return route


def _by_faa(k: int, n: int) -> int:
    parity, m = _half(k)
    if parity is Parity.EVEN:
        return chebyshev.faa_even(m, n)
    return chebyshev.faa_odd(m, n)


def _by_exotic(k: int, n: int) -> int:
    return powersum.exotic_powersum(k // 2, n)


VALUE_METHODS: dict[str, Callable[[int, int], int]] = {
    'oracle': powersum.powersum_oracle,
    'recurrence': _by_recurrence,
    'det': _by_determinant(Basis.N),
    'faa': _by_faa,
    'chebyshev': chebyshev.powersum_via_chebyshev_series,
    'operator': powersum.powersum_via_operator,
    'stirling': powersum.powersum_via_stirling,
    'eulerian': lambda k, n: powersum.powersum_via_q(k, n, QForm.EULERIAN),
    'series': lambda k, n: powersum_from_egf(k, n, EGFRoute.MET1_DIVISION),
    'exotic': _by_exotic,
}

SWEEP_METHODS: dict[str, Callable[[int, int], int]] = {
    **VALUE_METHODS,
    'det-s1': _by_determinant(Basis.S1),
    'q-stirling': lambda k, n: powersum.powersum_via_q(k, n, QForm.STIRLING),
    'series-sum': lambda k, n: powersum_from_egf(k, n, EGFRoute.DIRECT_SUM),
}

_ZERO_POWER_METHODS = frozenset({'oracle', 'series', 'series-sum'})


def method_supports(method: str, k: int) -> bool:
    """ Whether the route is defined for S_k. """
    if k < 0:
        return False
    if k == 0:
        return method in _ZERO_POWER_METHODS
    if method == 'exotic':
        return k % 2 == 0
    return True


def powersum_by_method(method: str, k: int, n: int) -> int:
    try:
        route = SWEEP_METHODS[method]
    except KeyError:
        raise ValueError("unknown power-sum method {!r}".format(method)) from None
    if not method_supports(method, k):
        raise ValueError("method {!r} does not compute S_{}".format(method, k))
    if n < 1:
        raise ValueError("power sums need n >= 1, got {}".format(n))
    return route(k, n)


######################################################################
# Bernoulli and progression routes


BERNOULLI_METHODS: dict[str, Callable[[int], Fraction]] = {
    'det': bernoulli.bernoulli_det,
    'vanmalderen': bernoulli.bernoulli_vanmalderen,
    'faulhaber': bernoulli.bernoulli_from_faulhaber,
    'oracle': lambda k: bernoulli.bernoulli_oracle(2 * k),
}


def bernoulli_by_method(method: str, k: int) -> Fraction:
    try:
        route = BERNOULLI_METHODS[method]
    except KeyError:
        raise ValueError("unknown Bernoulli method {!r}".format(method)) from None
    return route(k)


AP_METHODS: dict[str, Callable[[int, arithprog.APParams], int]] = {
    'oracle': arithprog.ap_oracle,
    'series': arithprog.ap_series,
    'met9': arithprog.ap_met9,
}


def ap_by_method(method: str, k: int, p: arithprog.APParams) -> int:
    try:
        route = AP_METHODS[method]
    except KeyError:
        raise ValueError("unknown progression method {!r}".format(method)) from None
    return route(k, p)


######################################################################
# Sweeps


AP_MAX_START = 4
AP_MAX_STEP = 4


def cell_count(max_k: int, max_n: int) -> int:
    """ Progress units run_all reports: one per (k, n) cell plus one per Bernoulli order. """
    return 2 * max_k * max_n + max_k


def run_powersum_sweep(max_k: int, max_n: int, report: Optional[CrossCheckReport] = None,
                       progress: Progress = None) -> CrossCheckReport:
    report = report if report is not None else CrossCheckReport()
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            expected = powersum.powersum_oracle(k, n)
            for method, route in SWEEP_METHODS.items():
                if method == 'oracle' or not method_supports(method, k):
                    continue
                report.compare(method, k, n, expected, lambda: route(k, n))  # pylint: disable=cell-var-from-loop
            if progress:
                progress()
    return report


def run_bernoulli_sweep(max_k: int, report: Optional[CrossCheckReport] = None,
                        progress: Progress = None) -> CrossCheckReport:
    report = report if report is not None else CrossCheckReport()
    for k in range(1, max_k + 1):
        expected = bernoulli.bernoulli_oracle(2 * k)
        for method, route in BERNOULLI_METHODS.items():
            if method == 'oracle':
                continue
            report.compare('bernoulli-' + method, k, None, expected, lambda: route(k))  # pylint: disable=cell-var-from-loop
        if progress:
            progress()
    return report


def run_identity_sweep(max_k: int, max_n: int, report: Optional[CrossCheckReport] = None,
                       progress: Progress = None) -> CrossCheckReport:
    """ Doubling formulas and the power-sum identities at every (k, n). """
    report = report if report is not None else CrossCheckReport()
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            expected = powersum.powersum_oracle(2 * k - 1, 2 * n)
            try:
                doubled = powersum.doubling_identities(k, n)
            except PowerSumException as e:
                doubled = ("error: {}".format(e),) * 3
            for label, got in zip(('doubling-even', 'doubling-all', 'doubling-odd'), doubled):
                report.compare(label, 2 * k - 1, 2 * n, expected, lambda: got)  # pylint: disable=cell-var-from-loop
            try:
                identities = powersum.verify_identities(k, n).checks
            except PowerSumException as e:
                report.checks += 1
                report.per_method["identities"] = report.per_method.get("identities", 0) + 1
                report.mismatches.append(Mismatch('identities', k, n, 'ok', "error: {}".format(e)))
                identities = []
            for check in identities:
                report.compare(check.name, k, n, check.expected, lambda: check.got)  # pylint: disable=cell-var-from-loop
            if progress:
                progress()
    return report


def run_ap_sweep(max_k: int, max_n: int, report: Optional[CrossCheckReport] = None) -> CrossCheckReport:
    """ Progression routes for small starts and steps, k = 0..max_k. """
    report = report if report is not None else CrossCheckReport()
    for a in range(0, AP_MAX_START + 1):
        for d in range(1, AP_MAX_STEP + 1):
            for k in range(0, max_k + 1):
                for n in range(1, max_n + 1):
                    p = arithprog.APParams(a, d, n)
                    expected = arithprog.ap_oracle(k, p)
                    for method in ('series', 'met9'):
                        label = "ap-{}[a={},d={}]".format(method, a, d)
                        report.compare(label, k, n, expected, lambda: ap_by_method(method, k, p))  # pylint: disable=cell-var-from-loop
    return report


def run_all(max_k: int, max_n: int, progress: Progress = None) -> CrossCheckReport:
    """ Every sweep into one report; mismatches come out sorted by k then n. """
    if max_k < 1 or max_n < 1:
        raise ValueError("need max_k, max_n >= 1, got {}, {}".format(max_k, max_n))
    report = CrossCheckReport()
    run_powersum_sweep(max_k, max_n, report, progress)
    run_bernoulli_sweep(max_k, report, progress)
    run_identity_sweep(max_k, max_n, report, progress)
    run_ap_sweep(max_k, max_n, report)
    report.mismatches.sort(key=lambda m: (m.k, m.n if m.n is not None else -1, m.method))
    return report
