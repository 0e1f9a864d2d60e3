import itertools
import math
from fractions import Fraction

import pytest

from conftest import full_search
from sharpmap.families import invariant_poly
from sharpmap.lp import LPProblem, minimize, raw_system
from sharpmap.poly import Poly
from sharpmap.search import (
    BudgetExceeded,
    SearchBudget,
    min_l0,
    sharp_bound,
    symmetric_min_terms,
    uniqueness_holds,
    uniqueness_test,
)
from sharpmap.systems import LinearSystem, build_eliminated, build_homogenized, build_symmetric, reduce_support

x, y = Poly.var(2, 0), Poly.var(2, 1)

P17 = x**7 + y**7 + Fraction(7, 2) * (x**5 * y + x * y**5) + Fraction(7, 2) * x * y
P18 = x**7 + y**7 + 7 * x**3 * y**3 + 7 * x * y**3 + 7 * x**3 * y
P19 = x**7 + 7 * x**5 * y + 14 * x**3 * y**2 + 7 * x * y**3 + y**7
P20 = x**7 + 7 * x * y**5 + 14 * x**2 * y**3 + 7 * x**3 * y + y**7


def lp_min_support(system, constrained):
    """Smallest support admitting a nonnegative solution, found by trying
    every column subset with the simplex solver."""
    ncols = len(system.columns)
    for size in range(1, ncols + 1):
        for support in itertools.combinations(range(ncols), size):
            sub = raw_system([[row[j] for j in support] for row in system.matrix], system.rhs)
            dist = [-1 if j in system.distinguished and constrained else 0 for j in support]
            result = minimize(LPProblem(tuple(dist), sub))
            if result.optimal and (not constrained or result.value < 0):
                return size
    return math.inf


@pytest.mark.parametrize(
    "n, d, constrained",
    [(2, 1, True), (2, 2, True), (2, 2, False), (2, 3, True), (2, 3, False), (3, 2, True), (2, 4, True)],
)
def test_min_l0_matches_lp_oracle(n, d, constrained):
    system = build_homogenized(n, d)
    assert min_l0(system, degree_constrained=constrained).min_l0 == lp_min_support(system, constrained)


def test_degree_two_witnesses():
    report = full_search(2, 2)
    assert report.min_l0 == 3
    assert [w.vector(5) for w in report.witnesses] == [(0, 0, 1, 2, 1), (0, 1, 1, 1, 0), (1, 0, 0, 1, 1)]
    unconstrained = full_search(2, 2, False)
    assert unconstrained.min_l0 == 2
    assert unconstrained.polynomials == [x + y]


@pytest.mark.parametrize("d, expected", [(1, 2), (2, 3), (3, 3), (4, 4), (5, 4), (6, 5), (7, 5)])
def test_sharp_bounds_two_variables(d, expected):
    assert full_search(2, d).min_l0 == expected == sharp_bound(2, d)


def test_witness_counts():
    assert [len(full_search(2, d).witnesses) for d in range(1, 8)] == [1, 3, 1, 4, 2, 10, 4]


def test_degree_seven_witnesses_and_norms():
    report = full_search(2, 7)
    assert set(report.polynomials) == {P17, P18, P19, P20}
    assert sorted(w.l1 for w in report.witnesses) == [Fraction(25, 2), 23, 30, 30]


def test_three_variables_degree_two():
    report = full_search(3, 2)
    assert report.min_l0 == 5 == sharp_bound(3, 2)
    assert len(report.witnesses) == 3


def test_eliminated_gives_same_answers():
    for d in range(1, 5):
        a = min_l0(build_eliminated(2, d), enumerate_all=True)
        assert a.min_l0 == full_search(2, d).min_l0
        assert set(a.polynomials) == set(full_search(2, d).polynomials)


@pytest.mark.parametrize("d", range(1, 8))
def test_witness_invariants(d):
    for w in full_search(2, d).witnesses:
        p = w.polynomial
        assert p.hyperplane_value() == 1 and p.is_nonnegative() and p.degree == d
        assert w.l0 == p.term_count and w.l1 == p.coeff_sum
        # at least two terms of top degree
        assert p.top_form().term_count >= 2
        if d % 2 == 1:
            assert p.coeff((d, 0)) == 1 and p.coeff((0, d)) == 1


@pytest.mark.parametrize("d", [1, 3, 5, 7])
def test_reduced_search_agrees_with_full(d):
    assert set(uniqueness_test(d)) == set(full_search(2, d).polynomials)


def test_uniqueness():
    p5 = invariant_poly(5)
    assert uniqueness_test(5) == sorted([p5, p5.swap()], key=Poly.sort_key)
    assert uniqueness_holds(5) and uniqueness_holds(3)
    assert not uniqueness_holds(7)
    assert set(uniqueness_test(7)) == {P17, P18, P19, P20}
    p9 = invariant_poly(9)
    assert set(uniqueness_test(9)) == {p9, p9.swap()}


def test_uniqueness_rejects_even():
    with pytest.raises(ValueError):
        uniqueness_test(4)


def test_reduced_report_counts_fixed_terms():
    report = min_l0(reduce_support(build_homogenized(2, 5)), degree_constrained=False)
    assert report.min_l0 == 4


@pytest.mark.parametrize("d, expected, count", [(1, 2, 1), (3, 3, 1), (5, 5, 8), (7, 5, 2), (9, 7, None)])
def test_symmetric_min_terms(d, expected, count):
    best, polys = symmetric_min_terms(d)
    assert best == expected
    if count is not None:
        assert len(polys) == count
    for p in polys:
        assert p == p.swap() and p.term_count == best and p.hyperplane_value() == 1


def test_symmetric_degree_seven_witnesses():
    assert set(symmetric_min_terms(7)[1]) == {P17, P18}


def test_worker_count_does_not_change_results():
    for system in (build_homogenized(2, 5), build_symmetric(7), reduce_support(build_homogenized(2, 7))):
        reports = [
            min_l0(system, degree_constrained=not system.reduced, enumerate_all=True, budget=SearchBudget(workers=w))
            for w in (1, 2, 3)
        ]
        assert all(r == reports[0] for r in reports)


def test_single_witness_has_smallest_support():
    for d in range(1, 7):
        one = min_l0(build_homogenized(2, d))
        every = full_search(2, d)
        assert len(one.witnesses) == 1
        assert one.witnesses[0].support == min(w.support for w in every.witnesses)


def test_combination_budget():
    with pytest.raises(BudgetExceeded, match="more than 50 candidate"):
        min_l0(build_homogenized(2, 7), budget=SearchBudget(max_combinations=50))


def test_support_budget():
    with pytest.raises(BudgetExceeded, match="at most 3 terms"):
        min_l0(build_homogenized(2, 5), budget=SearchBudget(max_support=3))


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(workers=0)


def test_infeasible_reports_infinity():
    system = LinearSystem("homogenized", 2, 1, ((1, 0),), ((Fraction(1),),), (Fraction(-1),), frozenset())
    assert min_l0(system, degree_constrained=False).min_l0 == math.inf


def test_unsupported_kind():
    with pytest.raises(ValueError):
        min_l0(raw_system([[1]], [1]))


def test_sharp_bound_values():
    assert [sharp_bound(2, d) for d in range(1, 10)] == [2, 3, 3, 4, 4, 5, 5, 6, 6]
    assert sharp_bound(3, 4) == 9
    with pytest.raises(ValueError):
        sharp_bound(1, 3)
