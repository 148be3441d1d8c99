from .commandenv import ResultRow
from .parsing import OrderArgument, ParseArgument
from ..powersum import Basis, Factor, Parity, faulhaber_poly

######################################################################
# Parser config

help = 'Print the Faulhaber polynomial of S_2k (even) or S_2k-1 (odd).'
name = 'poly'
epilog = (
    "In the N basis the polynomial is in N = n + 1/2. In the S1 basis it "
    "is a polynomial in S_1 times S_2 (even), times S_1^2 (odd, k >= 2), "
    "or alone (S_1 itself)."
)
arguments = [
    OrderArgument('--k', least=1, help='Order k: S_2k for even, S_2k-1 for odd.'),
    ParseArgument('--parity', '-p',
        help='Which power sum: even or odd.',
        choices=[p.value for p in Parity],
    ),
]
switches = [
    ParseArgument('--basis', '-b',
        help='Variable to express the polynomial in: N (default) or S1.',
        choices=[b.value for b in Basis],
        default=Basis.N.value,
    ),
]

# How each basis and factor is spelled in plain and LaTeX output.
SYMBOLS = {Basis.N: "N", Basis.S1: "S_1"}
PLAIN_FACTORS = {Factor.ONE: "{}", Factor.S2: "S_2*({})", Factor.S1_SQUARED: "S_1^2*({})"}
LATEX_FACTORS = {
    Factor.ONE: "{}",
    Factor.S2: "S_2\\left({}\\right)",
    Factor.S1_SQUARED: "S_1^2\\left({}\\right)",
}

######################################################################
# Perform query and populate result set

def run(results, cmdenv):
    k, parity, basis = int(cmdenv.k), Parity(cmdenv.parity), Basis(cmdenv.basis)
    
    cmdenv.DEBUG0("{} Faulhaber polynomial of order {} in {}", parity.value, k, basis.value)
    fp = faulhaber_poly(parity, k, basis)
    results.summary = ResultRow(k=k, parity=parity, basis=basis)
    results.rows.append(ResultRow(poly=fp))
    
    return results

######################################################################
# Transform result set into output

def render(results, cmdenv):
    from ..formatting import (
        format_polynomial, latex_polynomial, polynomial_strings, to_csv, to_json,
    )
    
    fp = results.rows[0].poly
    symbol = SYMBOLS[fp.basis]
    if cmdenv.format == 'json':
        cmdenv.emit(to_json({
            "verb": name,
            "params": {"k": fp.k, "parity": fp.parity.value, "basis": fp.basis.value},
            "result": {
                "coeffs": polynomial_strings(fp.body),
                "basis": fp.basis.value,
                "factor": fp.factor.value,
            },
        }))
    elif cmdenv.format == 'csv':
        cmdenv.emit(to_csv(
            ('basis', 'parity', 'k', 'power', 'coefficient'),
            [
                (fp.basis.value, fp.parity.value, fp.k, power, polynomial_strings(fp.body)[power])
                for power in range(fp.body.degree + 1)
            ],
        ))
    elif cmdenv.format == 'latex':
        text = LATEX_FACTORS[fp.factor].format(latex_polynomial(fp.body, symbol))
        cmdenv.emit("S_{{{}}} = {}".format(fp.index, text) if cmdenv.detail else text)
    else:
        text = PLAIN_FACTORS[fp.factor].format(format_polynomial(fp.body, symbol))
        cmdenv.emit("S_{} = {}".format(fp.index, text) if cmdenv.detail else text)
