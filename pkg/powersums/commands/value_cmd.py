from .commandenv import ResultRow
from .exceptions import CommandLineError
from .parsing import MethodArgument, OrderArgument
from .. import crosscheck

######################################################################
# Parser config

help = 'Compute S_k(n) = 1^k + 2^k + ... + n^k by one of the exact routes.'
name = 'value'
epilog = (
    "The exotic method only handles even k, and only the oracle and the "
    "series method handle k = 0."
)
arguments = [
    OrderArgument('--k', least=0, help='The power k.'),
    OrderArgument('--n', least=1, help='The number of terms n.'),
]
switches = [
    MethodArgument(crosscheck.VALUE_METHODS, 'det'),
]

######################################################################
# Perform query and populate result set

def run(results, cmdenv):
    k, n, method = int(cmdenv.k), int(cmdenv.n), cmdenv.method
    if not crosscheck.method_supports(method, k):
        raise CommandLineError("The '{}' method does not compute S_{}.".format(method, k))
    
    cmdenv.DEBUG0("S_{}({}) via {}", k, n, method)
    results.summary = ResultRow(k=k, n=n, method=method)
    results.rows.append(ResultRow(
        method=method, k=k, n=n,
        value=crosscheck.powersum_by_method(method, k, n),
    ))
    
    return results

######################################################################
# Transform result set into output

def render(results, cmdenv):
    from ..formatting import format_rational, to_csv, to_json
    
    row = results.rows[0]
    if cmdenv.format == 'json':
        cmdenv.emit(to_json({
            "verb": name,
            "params": {"k": row.k, "n": row.n, "method": row.method},
            "result": format_rational(row.value),
        }))
    elif cmdenv.format == 'csv':
        cmdenv.emit(to_csv(('method', 'k', 'n', 'value'), [(row.method, row.k, row.n, row.value)]))
    elif cmdenv.detail:
        cmdenv.emit("S_{}({}) = {}".format(row.k, row.n, row.value))
    else:
        cmdenv.emit(format_rational(row.value))
