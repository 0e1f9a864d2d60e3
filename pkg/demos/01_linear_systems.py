"""
Polynomials equal to 1 on a line, as linear systems
===================================================

A polynomial p(x, y) with no constant term equals 1 on x + y = 1 exactly
when its homogenization matches (x + y)^d coefficient by coefficient.  That
turns the question into a linear system with nonnegative integer entries.
"""

from sharpmap import Poly, build_eliminated, build_homogenized
from sharpmap.linalg import rank

x, y = Poly.var(2, 0), Poly.var(2, 1)

# the degree-2 system: one column per monomial x, y, x^2, xy, y^2
system = build_homogenized(2, 2)
print("columns:", system.columns)
for row, b in zip(system.matrix, system.rhs):
    print("  ", [int(v) for v in row], "=", int(b))

# any column vector solving it assembles into a polynomial equal to 1 on the line
p = system.assemble([0, 1, 1, 1, 0])
print("\n(0,1,1,1,0) ->", p, "  value on the line:", p.hyperplane_value())

# degree 3 has 9 unknowns but only 4 independent equations
d3 = build_homogenized(2, 3)
print("\ndegree 3:", d3.shape, "rank", rank(d3.matrix))

# substituting y = 1 - x gives an equivalent system with right-hand side e_0
elim = build_eliminated(2, 2)
print("\neliminated degree-2 system:")
for mu, row, b in zip(elim.rows, elim.matrix, elim.rhs):
    print(f"   x^{mu[0]}:", [int(v) for v in row], "=", int(b))
print("same solution accepted:", elim.is_solution(elim.coefficient_vector(p)))
