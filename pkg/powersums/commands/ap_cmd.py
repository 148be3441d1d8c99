from .commandenv import ResultRow
from .parsing import MethodArgument, OrderArgument
from .. import crosscheck
from ..arithprog import APParams

######################################################################
# Parser config

help = 'Compute a^k + (a+d)^k + ... + (a+(n-1)d)^k over an arithmetic progression.'
name = 'ap'
epilog = None
arguments = [
    OrderArgument('--k', least=0, help='The power k.'),
    OrderArgument('--a', least=0, help='The first term a.'),
    OrderArgument('--d', least=1, help='The common difference d.'),
    OrderArgument('--n', least=1, help='The number of terms n.'),
]
switches = [
    MethodArgument(crosscheck.AP_METHODS, 'met9'),
]

######################################################################
# Perform query and populate result set

def run(results, cmdenv):
    k, method = int(cmdenv.k), cmdenv.method
    p = APParams(int(cmdenv.a), int(cmdenv.d), int(cmdenv.n))
    
    cmdenv.DEBUG0("S_{}^{{{},{}}}({}) via {}", k, p.a, p.d, p.n, method)
    results.summary = ResultRow(k=k, params=p, method=method)
    results.rows.append(ResultRow(
        method=method, k=k, params=p,
        value=crosscheck.ap_by_method(method, k, p),
    ))
    
    return results

######################################################################
# Transform result set into output

def render(results, cmdenv):
    from ..formatting import format_rational, to_csv, to_json
    
    row = results.rows[0]
    p = row.params
    if cmdenv.format == 'json':
        cmdenv.emit(to_json({
            "verb": name,
            "params": {"k": row.k, "a": p.a, "d": p.d, "n": p.n, "method": row.method},
            "result": format_rational(row.value),
        }))
    elif cmdenv.format == 'csv':
        cmdenv.emit(to_csv(
            ('method', 'k', 'a', 'd', 'n', 'value'),
            [(row.method, row.k, p.a, p.d, p.n, row.value)],
        ))
    elif cmdenv.detail:
        cmdenv.emit("{} terms from {} to {}: {}".format(p.n, p.a, p.last, row.value))
    else:
        cmdenv.emit(format_rational(row.value))
