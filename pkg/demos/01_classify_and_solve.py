"""Walk the base axis and watch the root structure change.

The equation a^x + a^(-x) = x rewrites to 2*cosh(x*ln a) = x.  The cosh
side is a convex bowl whose steepness grows with |ln a|: squeeze the bowl
hard enough (a far from 1) and the line y = x never catches it; relax it
and the line cuts twice.  The crossover happens at a_min and a_max, where
the bowl touches the line tangentially.
"""

from coshroots import BaseParameter, classify, critical_constants, solve_all

c = critical_constants()
print(f"q        = {c.q:.15g}   (solves coth q = q)")
print(f"a_min    = {c.a_min:.15g}")
print(f"a_max    = {c.a_max:.15g}")
print(f"x_dagger = {c.x_dagger:.15g}   (the tangent root 2*cosh q)")
print()

samples = [0.0, 0.5, c.a_min, 0.75, 0.9, 1.0, 1.08, 1.39, c.a_max, 2.0]
for a in samples:
    base = BaseParameter(a)
    outcome = classify(base)
    report = solve_all(base)
    roots = ", ".join(f"{r.x:.6f} (|f|={abs(r.residual):.1e})" for r in report.roots)
    flag = "  [by convention]" if outcome.by_convention else ""
    print(f"a = {a:<20.12g} {outcome.tag.value:<14} roots: {roots or '-'}{flag}")

print()
print("Note how the two roots are born at x_dagger when a enters the")
print("critical interval, split apart, and x2 runs away as a -> 1 while")
print("x1 settles toward 2 (the a = 1 root).")
