"""
Fewest terms: exhaustive minimum-L0 search
==========================================

Among nonnegative solutions, find those with the fewest monomials.  The
search walks supports in order of size and solves each exactly, so every
answer is a proof: nothing smaller exists.
"""

import time

from sharpmap import build_homogenized, min_l0, reduce_support, sharp_bound, uniqueness_test

# degree 2: three polynomials with 3 terms, and x + y if degree 2 is not required
report = min_l0(build_homogenized(2, 2), enumerate_all=True)
print("degree 2, at least one term of degree 2:", report.min_l0, "terms")
for w in report.witnesses:
    print("   ", w.polynomial)
print("without the degree requirement:", min_l0(build_homogenized(2, 2), degree_constrained=False).min_l0)

# the minimum grows like d/2
print("\n d  min  bound   time")
for d in range(1, 7):
    start = time.perf_counter()
    found = min_l0(build_homogenized(2, d)).min_l0
    print(f"{d:2d}  {found:3d}  {sharp_bound(2, d):5d}  {time.perf_counter() - start:5.2f}s")

# for odd d, fixing x^d = y^d = 1 and dropping forced zeros shrinks the system
reduced = reduce_support(build_homogenized(2, 7))
print("\nreduced degree-7 system:", reduced.shape, "fixed", reduced.fixed_poly())
for p in uniqueness_test(7):
    print(f"    {str(p):55s} sum of coefficients {p.coeff_sum}")

# degree 9 is quick on the reduced system: only the invariant pair remains
print("\ndegree 9:")
for p in uniqueness_test(9):
    print("   ", p)
