"""The sums h_q = sum_p H_p / (2p+1)^q and their lambda-only closed forms.

Even q needs a log 2 term; odd q collapses to pure lambda products thanks to
the convolution identity sum_j lambda(2j) lambda(2n-2j) = (n - 1/2) lambda(2n).
Run with:  python demos/02_harmonic_over_odd_powers.py
"""

from fractions import Fraction

from eulersum import OracleConfig, PrecisionContext, SumId, eval_sym, oracle_eval
from eulersum.closedform import h2n_sum, h_odd_over_odd, h_sum
from eulersum.symexpr import LOG2, PI, SymExpr, lambda_sym, zeta_sym

ctx = PrecisionContext(working_bits=192)
cfg = OracleConfig(target_tolerance=1e-12)

print("h_q closed forms and oracle values")
print("=" * 72)
for q in range(2, 11):
    expr = h_sum(q)
    num = eval_sym(expr, ctx)
    orc = oracle_eval(SumId.h(q), cfg, ctx)
    agree = abs(float(num - orc.value))
    print(f"h_{q:<2d} = {expr}")
    print(f"       {num.decimal(22)}   |closed form - oracle| = {agree:.1e}")
print()

print("The weight-4 special case in pi form:")
h3 = h_sum(3)
assert h3 == SymExpr.atom(PI, 4, Fraction(1, 64)) - (zeta_sym(3) * SymExpr.atom(LOG2)).scaled(Fraction(7, 4))
print(f"h_3  = pi^4/64 - 7/4 zeta(3) log 2 = {h3}")
print()

print("The convolution identity that powers the odd case")
print("=" * 72)
for n in range(2, 8):
    lhs = SymExpr.zero()
    for j in range(1, n):
        lhs = lhs + lambda_sym(2 * j) * lambda_sym(2 * n - 2 * j)
    rhs = lambda_sym(2 * n).scaled(Fraction(2 * n - 1, 2))
    print(f"n={n}:  sum_j lambda(2j)lambda({2 * n}-2j) == (n-1/2) lambda({2 * n}) : {lhs == rhs}")
print()

print("Relatives with doubled harmonic index")
print("=" * 72)
for a in (1, 2, 3):
    for label, expr, sid in [
        (f"sum H_2n/n^{2 * a}", h2n_sum(a), SumId.Z(a)),
        (f"sum H_(2n-1)/(2n-1)^{2 * a}", h_odd_over_odd(a), SumId.hodd_over_odd(a)),
    ]:
        num = eval_sym(expr, ctx)
        orc = oracle_eval(sid, cfg, ctx)
        print(f"{label:26s} = {num.decimal(20):24s} oracle {orc.value.decimal(20)}")
