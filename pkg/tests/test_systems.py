import random
from fractions import Fraction
from math import comb

import pytest

from sharpmap.linalg import nullspace, rank, rref
from sharpmap.poly import Poly, monomials_upto
from sharpmap.systems import (
    LinearSystem,
    SymmetricBasisElement,
    build_eliminated,
    build_homogenized,
    build_symmetric,
    reduce_support,
    symmetric_basis,
)

x, y = Poly.var(2, 0), Poly.var(2, 1)


def ints(matrix):
    return [[int(v) for v in row] for row in matrix]


def test_homogenized_degree_two():
    system = build_homogenized(2, 2)
    assert system.columns == ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2))
    assert ints(system.matrix) == [[1, 0, 1, 0, 0], [1, 1, 0, 1, 0], [0, 1, 0, 0, 1]]
    assert system.rhs == (1, 2, 1)
    assert system.distinguished == {2, 3, 4}


def test_homogenized_degree_three():
    system = build_homogenized(2, 3)
    assert system.columns == ((1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3))
    assert ints(system.matrix) == [
        [1, 0, 1, 0, 0, 1, 0, 0, 0],
        [2, 1, 1, 1, 0, 0, 1, 0, 0],
        [1, 2, 0, 1, 1, 0, 0, 1, 0],
        [0, 1, 0, 0, 1, 0, 0, 0, 1],
    ]
    assert system.rhs == (1, 3, 3, 1)
    assert rank(system.matrix) == 4
    assert len(nullspace(system.matrix, 9)) == 5


@pytest.mark.parametrize("d", range(1, 9))
def test_unknown_counts_two_variables(d):
    # one unknown per monomial of degree 1..d
    assert len(build_homogenized(2, d).columns) == (d * d + 3 * d) // 2
    assert len(build_homogenized(2, d, include_constant=True).columns) == (d * d + 3 * d) // 2 + 1


@pytest.mark.parametrize("n, d", [(2, 1), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_homogenized_shape(n, d):
    system = build_homogenized(n, d)
    assert system.shape == (comb(n + d - 1, d), comb(n + d, d) - 1)
    assert all(v >= 0 for row in system.matrix for v in row)


def test_eliminated_degree_one():
    system = build_eliminated(2, 1)
    assert system.columns == ((1, 0), (0, 1))
    # constant row: a2 = 1; x row: a1 - a2 = 0
    assert ints(system.matrix) == [[0, 1], [1, -1]]
    assert system.rhs == (1, 0)


@pytest.mark.parametrize(
    "poly",
    [x + y, x**2 + 2 * x * y + y**2, x + x * y + y**2, y + x * y + x**2, x**2 + 2 * y - y**2],
)
def test_eliminated_accepts_degree_two_solutions(poly):
    for system in (build_eliminated(2, 2), build_homogenized(2, 2)):
        assert system.is_solution(system.coefficient_vector(poly))


def _random_solution(system, rng):
    """A random (signed) solution of the affine system."""
    reduced, pivots = rref([list(r) + [b] for r, b in zip(system.matrix, system.rhs)])
    ncols = len(system.columns)
    u = [Fraction(0)] * ncols
    for row, p in zip(reduced, pivots):
        u[p] = row[-1]
    for v in nullspace(system.matrix, ncols):
        t = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        u = [a + t * b for a, b in zip(u, v)]
    return u


@pytest.mark.parametrize("n, d", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3)])
def test_eliminated_and_homogenized_agree(n, d):
    rng = random.Random(n * 100 + d)
    hom, elim = build_homogenized(n, d), build_eliminated(n, d)
    assert hom.columns == elim.columns
    for _ in range(25):
        u = _random_solution(hom, rng)
        assert hom.is_solution(u) and elim.is_solution(u)
        j = rng.randrange(len(u))
        u[j] += Fraction(rng.randint(1, 5), rng.randint(1, 3))
        assert not hom.is_solution(u) and not elim.is_solution(u)


def test_solution_means_identity_on_hyperplane():
    rng = random.Random(7)
    system = build_homogenized(2, 4)
    for _ in range(10):
        p = system.assemble(_random_solution(system, rng))
        assert p.hyperplane_value() == 1


def test_symmetric_basis_small_degrees():
    assert symmetric_basis(1) == [SymmetricBasisElement(0, 1)]
    listed = {(0, 1), (1, 0), (0, 3), (1, 1)}
    found = {(e.a, e.b) for e in symmetric_basis(3)}
    # the basis is every (a, b) with 2a + b <= d; (0, 2) belongs for d = 3
    assert listed < found
    assert found == listed | {(0, 2)}


def test_symmetric_weights():
    system = build_symmetric(5)
    for j, e in enumerate(system.columns):
        assert system.column_weight(j) == (1 if e.b == 0 else 2)
        assert e.poly().term_count == system.column_weight(j)


def test_symmetric_reproduces_degree_seven_example():
    system = build_symmetric(7)
    p = x**7 + 7 * x**3 * y**3 + 7 * x**3 * y + 7 * x * y**3 + y**7
    values = {}
    for j, e in enumerate(system.columns):
        values[j] = p.coeff((e.a + e.b, e.a))
    assert p.hyperplane_value() == 1
    assert system.assemble(values) == p
    assert system.is_solution([values[j] for j in range(len(system.columns))])


def test_symmetric_needs_odd_degree():
    with pytest.raises(ValueError):
        build_symmetric(4)


def test_reduce_support_degree_seven():
    reduced = reduce_support(build_homogenized(2, 7))
    assert len(reduced.columns) == 15
    assert all(a > 0 and b > 0 and a + b < 7 for a, b in reduced.columns)
    assert reduced.rhs == (7, 21, 35, 35, 21, 7)
    assert reduced.fixed == (((0, 7), 1), ((7, 0), 1))
    assert reduced.fixed_poly() == x**7 + y**7


def test_reduce_support_degree_one():
    reduced = reduce_support(build_homogenized(2, 1))
    assert reduced.columns == () and reduced.matrix == ()
    assert reduced.fixed_poly() == x + y


def test_reduce_support_keeps_known_solution():
    p5 = x**5 + 5 * x**3 * y + 5 * x * y**2 + y**5
    reduced = reduce_support(build_homogenized(2, 5))
    assert reduced.is_solution(reduced.coefficient_vector(p5))
    assert reduced.assemble(reduced.coefficient_vector(p5)) == p5


def test_reduce_support_rejects_bad_input():
    with pytest.raises(ValueError):
        reduce_support(build_homogenized(2, 4))
    with pytest.raises(ValueError):
        reduce_support(reduce_support(build_homogenized(2, 5)))


@pytest.mark.parametrize(
    "system",
    [
        build_homogenized(2, 3),
        build_homogenized(3, 2, include_constant=True),
        build_eliminated(3, 2),
        build_symmetric(5),
        reduce_support(build_homogenized(2, 5)),
    ],
)
def test_json_round_trip(system):
    assert LinearSystem.from_json(system.to_json()) == system


def test_json_rejects_unknown_kind():
    data = build_homogenized(2, 2).to_json()
    data["kind"] = "bogus"
    with pytest.raises(ValueError, match="kind"):
        LinearSystem.from_json(data)


def test_column_order_is_graded():
    assert build_homogenized(3, 2).columns == tuple(monomials_upto(3, 2, start=1))
