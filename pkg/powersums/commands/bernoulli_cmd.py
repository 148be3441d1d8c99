from .commandenv import ResultRow
from .parsing import MethodArgument, OrderArgument
from .. import crosscheck
from ..bernoulli import BernoulliValue

######################################################################
# Parser config

help = 'Compute the Bernoulli number B_2k.'
name = 'bernoulli'
epilog = (
    "With --detail, also report the denominator predicted by von "
    "Staudt-Clausen, which the computed value must share."
)
arguments = [
    OrderArgument('--k', least=1, help='Half the Bernoulli index: prints B_2k.'),
]
switches = [
    MethodArgument(crosscheck.BERNOULLI_METHODS, 'det'),
]

######################################################################
# Perform query and populate result set

def run(results, cmdenv):
    k, method = int(cmdenv.k), cmdenv.method
    
    cmdenv.DEBUG0("B_{} via {}", 2 * k, method)
    b = BernoulliValue(2 * k, crosscheck.bernoulli_by_method(method, k))
    if not b.denominator_ok:
        cmdenv.WARN("B_{} = {} does not have the von Staudt-Clausen denominator {}", b.index, b.value, b.expected_denominator)
    
    results.summary = ResultRow(k=k, method=method, denominator=b.expected_denominator)
    results.rows.append(ResultRow(method=method, k=k, value=b.value))
    
    return results

######################################################################
# Transform result set into output

def render(results, cmdenv):
    from ..formatting import format_rational, latex_rational, to_csv, to_json
    
    row = results.rows[0]
    if cmdenv.format == 'json':
        cmdenv.emit(to_json({
            "verb": name,
            "params": {"k": row.k, "method": row.method},
            "result": format_rational(row.value),
        }))
    elif cmdenv.format == 'csv':
        cmdenv.emit(to_csv(('method', 'k', 'n', 'value'), [(row.method, row.k, None, format_rational(row.value))]))
    elif cmdenv.format == 'latex':
        cmdenv.emit("B_{{{}}} = {}".format(2 * row.k, latex_rational(row.value)))
    elif cmdenv.detail:
        cmdenv.emit("B_{} = {}".format(2 * row.k, format_rational(row.value)))
        cmdenv.emit("von Staudt-Clausen denominator: {}".format(results.summary.denominator))
    else:
        cmdenv.emit(format_rational(row.value))
