"""
Newton diagrams and the sink bound
==================================

Divide p - 1 by x + y - 1 and mark each lattice point by the sign of the
quotient's coefficient.  Arrows leave positive points and enter negative
ones.  Every sink carries a positive coefficient of p, so the number of
sinks bounds the number of terms from below.
"""

from sharpmap import Poly, build_graph, dehomogenize_trace, invariant_poly, sink_certificate

x, y = Poly.var(2, 0), Poly.var(2, 1)
p5 = invariant_poly(5)
graph = build_graph(p5)

print("p_5 =", p5)
print("q   =", graph.quotient)

# draw the labels on the lattice, highest y first
width = max(a for a, _ in graph.domain) + 1
height = max(b for _, b in graph.domain) + 1
for b in reversed(range(height)):
    cells = []
    for a in range(width):
        mark = graph.label((a, b)) if (a, b) in graph.domain else "."
        if (a, b) in graph.sinks:
            mark = "*"
        cells.append(mark)
    print("   ", " ".join(cells))
print("sinks (*):", sorted(graph.sinks), " sources:", sorted(graph.sources))
print("certificate:", sink_certificate(p5))

# one route from (x + y)^5 down to p_5, one monomial at a time
print("\ndehomogenizing (x + y)^5:")
for step in dehomogenize_trace((x + y) ** 5, p5):
    print("   ", step)

print("\nGraphviz text for (x + y)^2:")
print(build_graph((x + y) ** 2).to_dot())
