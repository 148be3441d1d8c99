from .commandenv import ResultRow
from .parsing import OrderArgument
from .. import crosscheck
from ..misc.progress import CountingBar, Progress

######################################################################
# Parser config

help = 'Cross-check every route against the direct-summation oracles.'
name = 'verify'
epilog = (
    "Runs every power-sum route for k = 1..max-k and n = 1..max-n, every "
    "Bernoulli route for B_2..B_2max-k, the doubling formulas and power-sum "
    "identities, and the progression routes for small starts and steps. "
    "Exits with status 1 if any cell disagrees."
)
arguments = [
    OrderArgument('--max-k', least=1, help='Largest power (or order) to check.', dest='max_k'),
    OrderArgument('--max-n', least=1, help='Largest number of terms to check.', dest='max_n'),
]
switches = []

######################################################################
# Perform query and populate result set

def run(results, cmdenv):
    max_k, max_n = int(cmdenv.max_k), int(cmdenv.max_n)
    
    show = not cmdenv.quiet and cmdenv.stderr.is_terminal
    cmdenv.DEBUG0("verifying k <= {}, n <= {} ({} cells)", max_k, max_n, crosscheck.cell_count(max_k, max_n))
    with Progress(
            crosscheck.cell_count(max_k, max_n), prefix="Verifying", style=CountingBar,
            console=cmdenv.stderr, show=show,
            ) as prog:
        report = crosscheck.run_all(max_k, max_n, prog.increment)
    
    results.summary = ResultRow(max_k=max_k, max_n=max_n, report=report)
    failed = {}
    for mismatch in report.mismatches:
        failed[mismatch.method] = failed.get(mismatch.method, 0) + 1
    for method, checks in sorted(report.per_method.items()):
        results.rows.append(ResultRow(method=method, checks=checks, failed=failed.get(method, 0)))
    
    return results

######################################################################
# Transform result set into output

def _mismatch_dict(mismatch):
    from ..formatting import format_rational
    
    def text(value):
        return value if isinstance(value, str) else format_rational(value)
    
    return {
        "method": mismatch.method,
        "k": mismatch.k,
        "n": mismatch.n,
        "expected": text(mismatch.expected),
        "got": text(mismatch.got),
    }


def render(results, cmdenv):
    from ..formatting import RowFormat, max_len, to_csv, to_json
    
    summary = results.summary
    report = summary.report
    mismatches = [_mismatch_dict(m) for m in report.mismatches]
    
    if cmdenv.format == 'json':
        cmdenv.emit(to_json({
            "verb": name,
            "params": {"max_k": summary.max_k, "max_n": summary.max_n},
            "result": {"checks": str(report.checks), "mismatches": mismatches},
        }))
    elif cmdenv.format == 'csv':
        cmdenv.emit(to_csv(
            ('method', 'k', 'n', 'expected', 'got'),
            [(m["method"], m["k"], m["n"], m["expected"], m["got"]) for m in mismatches],
        ))
    else:
        rowFmt = RowFormat()
        rowFmt.addColumn('Method', '<', max_len(results.rows, key=lambda row: row.method),
                key=lambda row: row.method)
        rowFmt.addColumn('Checks', '>', 7, key=lambda row: row.checks)
        rowFmt.addColumn('Failed', '>', 6, key=lambda row: row.failed)
        
        if not cmdenv.quiet:
            heading, underline = rowFmt.heading()
            cmdenv.emit(heading)
            cmdenv.emit(underline)
        for row in results.rows:
            cmdenv.emit(rowFmt.format(row))
        cmdenv.emit("{} checks, {} mismatches".format(report.checks, len(report.mismatches)))
    
    report.raise_for_mismatches()
