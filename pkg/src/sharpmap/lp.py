"""Exact linear programming over the rationals.

Standard form only: minimize ``c @ u`` subject to ``A @ u = b`` and
``u >= 0``, with optional pinned variables.  The solver is a two-phase
tableau simplex using Bland's rule, so it terminates on degenerate problems
and its pivot sequence depends only on the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import rref, solve_unique
from .systems import LinearSystem

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class VertexBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class LPProblem:
    objective: tuple[Fraction, ...]
    constraints: LinearSystem
    pinned: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "pinned", {int(j): Fraction(v) for j, v in dict(self.pinned).items()})
        if len(self.objective) != len(self.constraints.columns):
            raise ValueError("objective length must equal the column count")
        for j, v in self.pinned.items():
            if v < 0:
                raise ValueError(f"pinned value for column {j} is negative")
            if not 0 <= j < len(self.objective):
                raise ValueError(f"pinned column {j} out of range")


@dataclass(frozen=True)
class LPResult:
    status: str
    point: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    basis: tuple[int, ...] = ()
    reduced_costs: tuple[Fraction, ...] = ()
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


def raw_system(matrix: Sequence[Sequence], rhs: Sequence) -> LinearSystem:
    """Wrap a bare matrix and right-hand side as a :class:`LinearSystem`."""
    matrix = tuple(tuple(Fraction(v) for v in row) for row in matrix)
    ncols = len(matrix[0]) if matrix else 0
    return LinearSystem(
        "raw", 0, 0, tuple((j,) for j in range(ncols)), matrix, tuple(Fraction(v) for v in rhs), frozenset()
    )


class _Tableau:
    """Dense simplex tableau; ``rows[i][-1]`` is the right-hand side."""

    def __init__(self, rows, basis):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, c: int):
        row = self.rows[r]
        inv = 1 / row[c]
        row = [v * inv for v in row]
        self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r and other[c] != 0:
                f = other[c]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], ncols: int) -> list[Fraction]:
        out = list(cost[:ncols])
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(ncols):
                    if row[j]:
                        out[j] -= cb * row[j]
        return out

    def run(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Bland's-rule simplex over the first ``allowed`` columns."""
        while True:
            rc = self.reduced_costs(cost, allowed)
            enter = next((j for j in range(allowed) if rc[j] < 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                if row[enter] > 0:
                    ratio = row[-1] / row[enter]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter)


def _solve_standard(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """Solve min c.u, A u = b, u >= 0.  Returns (status, u, basis, reduced_costs, pivots)."""
    n = len(c)
    if not A:
        if any(v < 0 for v in c):
            return UNBOUNDED, None, (), (), 0
        return OPTIMAL, [Fraction(0)] * n, (), tuple(c), 0
    red, pivots = rref([row + [bi] for row, bi in zip(A, b)], ncols=n)
    if any(all(v == 0 for v in row[:n]) for row in red):
        return INFEASIBLE, None, (), (), 0
    if not red:
        if any(v < 0 for v in c):
            return UNBOUNDED, None, (), (), 0
        return OPTIMAL, [Fraction(0)] * n, (), tuple(c), 0
    m = len(red)
    rows = []
    for i, row in enumerate(red):
        if row[n] < 0:
            row = [-v for v in row]
        rows.append(row[:n] + [Fraction(int(k == i)) for k in range(m)] + [row[n]])
    tab = _Tableau(rows, [n + i for i in range(m)])
    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    tab.run(phase1, n + m)
    if sum((tab.rows[i][-1] for i, bv in enumerate(tab.basis) if bv >= n), Fraction(0)) != 0:
        return INFEASIBLE, None, (), (), tab.pivots
    for i in range(m):
        if tab.basis[i] >= n:
            col = next(j for j in range(n) if tab.rows[i][j] != 0)
            tab.pivot(i, col)
    tab.rows = [row[:n] + [row[-1]] for row in tab.rows]
    status = tab.run(c, n)
    if status == UNBOUNDED:
        return UNBOUNDED, None, (), (), tab.pivots
    u = [Fraction(0)] * n
    for i, bv in enumerate(tab.basis):
        u[bv] = tab.rows[i][-1]
    return OPTIMAL, u, tuple(tab.basis), tuple(tab.reduced_costs(c, n)), tab.pivots


def _reduce_pins(problem: LPProblem):
    sys = problem.constraints
    free = [j for j in range(len(sys.columns)) if j not in problem.pinned]
    A = [[row[j] for j in free] for row in sys.matrix]
    b = list(sys.rhs)
    for j, v in problem.pinned.items():
        for i, row in enumerate(sys.matrix):
            b[i] -= row[j] * v
    c = [problem.objective[j] for j in free]
    return free, A, b, c


def minimize(problem: LPProblem) -> LPResult:
    """Exact optimum of ``problem``."""
    free, A, b, c = _reduce_pins(problem)
    status, u, basis, rc, pivots = _solve_standard(A, b, c)
    if status != OPTIMAL:
        return LPResult(status, pivots=pivots)
    point = [Fraction(0)] * len(problem.objective)
    for j, v in problem.pinned.items():
        point[j] = v
    for k, j in enumerate(free):
        point[j] = u[k]
    full_rc = [Fraction(0)] * len(point)
    for k, j in enumerate(free):
        full_rc[j] = rc[k]
    value = sum((a * x for a, x in zip(problem.objective, point)), Fraction(0))
    return LPResult(
        OPTIMAL, tuple(point), value, tuple(free[k] for k in basis), tuple(full_rc), pivots
    )


def feasible(system: LinearSystem, pinned: Mapping[int, Fraction] | None = None) -> LPResult:
    """Any exact nonnegative solution honoring ``pinned``, or status infeasible."""
    problem = LPProblem(tuple([0] * len(system.columns)), system, pinned or {})
    return minimize(problem)


def enumerate_vertex_optima(problem: LPProblem, max_subsets: int = 2_000_000) -> list[LPResult]:
    """All optimal vertices, sorted by point.

    Columns with a positive reduced cost at the optimum vanish on the whole
    optimal face (complementary slackness); the face's vertices are then
    exactly the supports of independent columns carrying a strictly positive
    solution.
    """
    best = minimize(problem)
    if not best.optimal:
        return []
    free, A, b, c = _reduce_pins(problem)
    face = [k for k, j in enumerate(free) if best.reduced_costs[j] == 0]
    # rank of the face columns bounds the support size of a vertex
    face_rank = len(rref([[row[k] for k in face] for row in A], ncols=len(face))[1]) if A and face else 0
    results = []
    checked = 0
    has_rhs = any(v != 0 for v in b)
    for size in range(0 if not has_rhs else 1, face_rank + 1):
        for support in itertools.combinations(face, size):
            checked += 1
            if checked > max_subsets:
                raise VertexBudgetExceeded(f"more than {max_subsets} candidate supports on the optimal face")
            cols = [[row[k] for row in A] for k in support]
            if not support:
                status, sol = ("unique", []) if not has_rhs else ("inconsistent", None)
            else:
                status, sol = solve_unique(cols, b)
            if status != "unique" or any(v <= 0 for v in sol):
                continue
            point = [Fraction(0)] * len(problem.objective)
            for j, v in problem.pinned.items():
                point[j] = v
            for k, v in zip(support, sol):
                point[free[k]] = v
            value = sum((a * x for a, x in zip(problem.objective, point)), Fraction(0))
            results.append(LPResult(OPTIMAL, tuple(point), value, tuple(free[k] for k in support)))
    results.sort(key=lambda r: r.point)
    return results
