"""
Three or more variables
=======================

With n >= 3 variables the fewest terms in degree d is d(n-1) + 1, reached by
the Whitney polynomials.  Tensoring on one term builds examples with every
term count past a threshold; two ranges of term counts are impossible.
"""

from sharpmap import build_homogenized, gap_admissible, min_l0, target_minimal_census, verify_sharp, whitney_poly

for n in (3, 4):
    for d in (1, 2, 3):
        p = whitney_poly(n, d)
        print(f"n={n} d={d}: {p.term_count:2d} terms  {p}")

# a direct search agrees for n = 3, d = 2
report = min_l0(build_homogenized(3, 2), enumerate_all=True)
print("\nsearch, n=3 d=2:", report.min_l0, "terms,", len(report.witnesses), "examples")
for w in report.witnesses:
    print("   ", w.polynomial, " verified:", verify_sharp(w.polynomial).verdict)

# which term counts occur for n = 3
census = target_minimal_census(3, 12)
print("\nterm counts with a tensor-built example (n=3):", [N for N, p in census.items() if p is not None])
print("term counts ruled out (n=4):", [N for N in range(1, 12) if not gap_admissible(4, N)])
