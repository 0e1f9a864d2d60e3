"""
Smallest coefficient sum: exact linear programming
==================================================

Minimizing the sum of coefficients (the value at (1, 1)) is a linear
program.  The solver is an exact simplex over the rationals, so optimal
values come out as fractions, not floats.
"""

from fractions import Fraction

from sharpmap import LPProblem, build_homogenized, build_symmetric, enumerate_vertex_optima, minimize, substitute

# with a constant column the optimum is the constant polynomial 1
with_constant = build_homogenized(2, 3, include_constant=True)
result = minimize(LPProblem((1,) * len(with_constant.columns), with_constant))
print("constant allowed:", result.value, "at", with_constant.assemble(result.point))

# without it the best is x + y
without = build_homogenized(2, 3)
result = minimize(LPProblem((1,) * len(without.columns), without))
print("no constant:     ", result.value, "at", without.assemble(result.point))

# symmetric polynomials of degree 11 with x^11 + y^11 present
system = build_symmetric(11)
top = next(j for j, e in enumerate(system.columns) if (e.a, e.b) == (0, 11))
problem = LPProblem(system.weights, system, pinned={top: 1})
best = minimize(problem)
print("\ndegree 11, symmetric:", best.value, "=", float(best.value))
print("   ", system.assemble(best.point))
print("    optimal vertices:", len(enumerate_vertex_optima(problem)))

# trading terms: subtract 7 x^3 y (p_2 - 1) from p_7
sub = substitute(7, 2, 3, 1, Fraction(7))
print("\nsubstitution:", sub.poly)
print("    nonnegative:", sub.nonnegative, " coefficient sum:", sub.coeff_sum)
