"""The simpler cousin a^x = x, solved in closed form with Lambert W.

W is the inverse of w * e^w; on its principal branch the fixed point of
a^x is x = -W(-ln a)/ln a, real exactly when a <= e^(1/e).  This is the
baseline the main solver is measured against: the two-term family
a^x + a^(-x) = x has no such closed form and needs the bracketed
iteration.
"""

import math

from coshroots import BaseParameter, lambert_w_principal, solve_exp_fixed_point

print(f"W(0)  = {lambert_w_principal(0.0)}")
print(f"W(e)  = {lambert_w_principal(math.e)}")
print(f"W(1)  = {lambert_w_principal(1.0):.12f}   (the omega constant)")
print(f"W(-1/e) = {lambert_w_principal(-math.exp(-1.0))}")
print()

for a in (0.5, 1.2, math.sqrt(2.0), 1.44):
    x = solve_exp_fixed_point(BaseParameter(a))
    print(f"a = {a:<18.12g} fixed point x = {x:.12f}   residual a^x - x = {a**x - x:+.2e}")

print()
a = math.exp(math.exp(-1.0))
x = solve_exp_fixed_point(BaseParameter(a))
print(f"boundary a = e^(1/e): x = {x:.8f} (exact value e; the fixed point")
print("sits at the W branch point, so double precision resolves it only to")
print("~1e-8 - the square root of machine epsilon)")

try:
    solve_exp_fixed_point(BaseParameter(1.5))
except ValueError as exc:
    print(f"\na = 1.5 raises: {exc}")
