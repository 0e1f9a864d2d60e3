"""Minimum-L0 nonnegative solutions by exhaustive support enumeration.

Supports are enumerated by ascending cost (number of monomials contributed)
and, within one cost, lexicographically over column indices.  Two exact
facts keep this small:

* A row with nonzero right-hand side needs some selected column that is
  nonzero in that row.  Candidates failing this are discarded without any
  arithmetic (counted in ``prunes_by_certificate``).
* At the minimal cost the selected columns are linearly independent.  If a
  strictly positive solution on dependent columns existed, moving along a
  null vector would reach a vertex with a smaller support that still has a
  nonzero top-degree coefficient (the feasible region is bounded, since all
  columns are nonzero with nonnegative entries), so a cheaper solution would
  already have been found.  So a branch is cut as soon as its columns
  become dependent, and each surviving candidate has a unique solution.

Elimination is carried incrementally down the search tree in fraction-free
integer form; Fractions appear only when a candidate actually solves.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from .linalg import rank as matrix_rank
from .linalg import solve_unique
from .poly import Poly
from .systems import LinearSystem, build_homogenized, build_symmetric, reduce_support


class BudgetExceeded(RuntimeError):
    """A search needed more candidate supports or a larger support than allowed."""


@dataclass(frozen=True)
class SearchBudget:
    max_support: int = 64
    max_combinations: int = 5_000_000
    workers: int = 1

    def __post_init__(self):
        if self.max_support < 1 or self.max_combinations < 1 or self.workers < 1:
            raise ValueError("budgets must be positive")


@dataclass(frozen=True)
class SupportSolution:
    support: tuple[int, ...]
    values: dict
    l0: int
    l1: Fraction
    polynomial: Poly

    def vector(self, ncols: int) -> tuple[Fraction, ...]:
        return tuple(self.values.get(j, Fraction(0)) for j in range(ncols))


@dataclass
class SearchReport:
    min_l0: float | int
    witnesses: list[SupportSolution] = field(default_factory=list)
    nodes_explored: int = 0
    prunes_by_certificate: int = 0

    @property
    def polynomials(self) -> list[Poly]:
        return [w.polynomial for w in self.witnesses]


def sharp_bound(n: int, d: int) -> int:
    """Smallest possible term count of a degree-``d`` example in ``n`` variables."""
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    if n == 2:
        return (d + 3) // 2 if d % 2 else d // 2 + 2
    return d * (n - 1) + 1


# -- the enumeration kernel ---------------------------------------------------


@dataclass(frozen=True)
class _Kernel:
    columns: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    masks: tuple[int, ...]
    need: int
    weights: tuple[int, ...]
    distinguished: frozenset
    constrained: bool
    max_cols: int


def _kernel(system: LinearSystem, constrained: bool) -> _Kernel:
    # identical rows carry no information; symmetric systems have many
    seen = {}
    for row, b in zip(system.matrix, system.rhs):
        seen.setdefault((row, b), None)
    rows, rhs = [], []
    for row, b in seen:
        # scale each row to integers; row scaling does not change solutions
        scale = math.lcm(*(Fraction(v).denominator for v in row), Fraction(b).denominator)
        rows.append([int(v * scale) for v in row])
        rhs.append(int(b * scale))
    ncols = len(system.columns)
    columns = tuple(tuple(r[j] for r in rows) for j in range(ncols))
    masks = tuple(sum(1 << i for i, v in enumerate(col) if v != 0) for col in columns)
    need = sum(1 << i for i, b in enumerate(rhs) if b != 0)
    r = matrix_rank(rows) if rows else 0
    return _Kernel(columns, tuple(rhs), masks, need, system.weights, system.distinguished, constrained, r)


def _reduce(v: list[int], pivots) -> list[int]:
    """Fraction-free elimination of ``v`` against echelon ``pivots``."""
    for p, i in pivots:
        t = v[i]
        if t:
            a = p[i]
            v = [x * a - y * t for x, y in zip(v, p)]
    g = math.gcd(*v)
    if g > 1:
        v = [x // g for x in v]
    return v


def _level(kernel: _Kernel, cost: int, first: int, enumerate_all: bool, budget: int):
    """All witnesses of exactly ``cost`` whose smallest column index is ``first``.

    ``first == -1`` means the empty support.  Returns
    ``(witnesses, nodes, prunes)``; witnesses are ``(support, solution)``.
    """
    cols, w, masks = kernel.columns, kernel.weights, kernel.masks
    ncols = len(cols)
    if first == -1:
        if cost == 0 and kernel.need == 0 and not kernel.constrained:
            return [((), [])], 1, 0
        return [], 1, 0
    suffix = [0] * (ncols + 1)
    suffix_dist = [False] * (ncols + 1)
    for j in range(ncols - 1, -1, -1):
        suffix[j] = suffix[j + 1] | masks[j]
        suffix_dist[j] = suffix_dist[j + 1] or j in kernel.distinguished
    found = []
    nodes = 0
    prunes = 0
    chosen = []

    def push(j, pivots, rhs):
        """Add column ``j`` to the echelon state; ``None`` if it is dependent."""
        v = _reduce(list(cols[j]), pivots)
        i = next((k for k, x in enumerate(v) if x), None)
        if i is None:
            return None
        new_pivots = pivots + [(v, i)]
        return new_pivots, _reduce(rhs, new_pivots[-1:])

    def leaf(rhs):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"more than {budget} candidate supports")
        if any(rhs):
            return False
        status, sol = solve_unique([cols[j] for j in chosen], kernel.rhs)
        if status == "unique" and all(v > 0 for v in sol):
            found.append((tuple(chosen), sol))
            return True
        return False

    def dfs(start, remaining, covered, has_dist, pivots, rhs):
        nonlocal prunes
        if remaining == 0:
            if covered & kernel.need != kernel.need or (kernel.constrained and not has_dist):
                prunes += 1
                return False
            return leaf(rhs)
        if len(chosen) >= kernel.max_cols:
            return False
        if (covered | suffix[start]) & kernel.need != kernel.need:
            prunes += 1
            return False
        if kernel.constrained and not has_dist and not suffix_dist[start]:
            return False
        for j in range(start, ncols):
            if w[j] > remaining:
                continue
            state = push(j, pivots, rhs)
            if state is None:
                prunes += 1
                continue
            chosen.append(j)
            hit = dfs(j + 1, remaining - w[j], covered | masks[j], has_dist or j in kernel.distinguished, *state)
            chosen.pop()
            if hit and not enumerate_all:
                return True
        return False

    if w[first] <= cost:
        state = push(first, [], list(kernel.rhs))
        if state is not None:
            chosen.append(first)
            dfs(first + 1, cost - w[first], masks[first], first in kernel.distinguished, *state)
    return found, nodes, prunes


def _level_task(args):
    return _level(*args)


def min_l0(
    system: LinearSystem,
    degree_constrained: bool = True,
    enumerate_all: bool = False,
    budget: SearchBudget | None = None,
) -> SearchReport:
    """Smallest number of monomials in a nonnegative solution of ``system``.

    With ``degree_constrained`` at least one distinguished (top-degree) column
    must be nonzero.  Fixed terms of a reduced system count toward ``l0``.
    An infeasible system reports ``min_l0 = math.inf``.
    """
    if system.kind not in ("homogenized", "eliminated", "symmetric"):
        raise ValueError(f"min_l0 does not handle systems of kind {system.kind!r}")
    budget = budget or SearchBudget()
    kernel = _kernel(system, degree_constrained and bool(system.distinguished))
    base = len(system.fixed)
    ncols = len(system.columns)
    report = SearchReport(math.inf)
    remaining = budget.max_combinations
    pool = ProcessPoolExecutor(budget.workers) if budget.workers > 1 else None
    try:
        max_cost = sum(kernel.weights)
        for cost in range(0, max_cost + 1):
            if base + cost > budget.max_support:
                raise BudgetExceeded(f"no solution with at most {budget.max_support} terms")
            tasks = [(kernel, cost, first, enumerate_all, remaining) for first in ([-1] if cost == 0 else range(ncols))]
            results = pool.map(_level_task, tasks) if pool else map(_level_task, tasks)
            witnesses = []
            for found, nodes, prunes in _guarded(results, budget.max_combinations):
                report.nodes_explored += nodes
                report.prunes_by_certificate += prunes
                remaining -= nodes
                witnesses.extend(found)
                if remaining < 0:
                    raise BudgetExceeded(f"more than {budget.max_combinations} candidate supports")
                if witnesses and not enumerate_all:
                    break
            if witnesses:
                witnesses.sort()
                if not enumerate_all:
                    witnesses = witnesses[:1]
                report.min_l0 = base + cost
                report.witnesses = [_to_solution(system, s, v) for s, v in witnesses]
                report.witnesses.sort(key=lambda sol: sol.vector(ncols))
                return report
        return report
    finally:
        if pool:
            pool.shutdown()


def _guarded(results, limit):
    try:
        yield from results
    except BudgetExceeded:
        raise BudgetExceeded(f"more than {limit} candidate supports") from None


def _to_solution(system: LinearSystem, support, sol) -> SupportSolution:
    values = dict(zip(support, sol))
    poly = system.assemble(values)
    return SupportSolution(tuple(support), values, poly.term_count, poly.coeff_sum, poly)


# -- the questions the search answers ----------------------------------------


def uniqueness_test(d: int, budget: SearchBudget | None = None) -> list[Poly]:
    """All nonnegative degree-``d`` polynomials with ``(d+3)/2`` terms equal to 1 on ``x+y=1``.

    Runs on the reduced system, where ``x^d`` and ``y^d`` are fixed to 1 and
    the remaining forced zeros are removed.
    """
    if d < 1 or d % 2 == 0:
        raise ValueError("uniqueness_test needs odd d")
    report = min_l0(reduce_support(build_homogenized(2, d)), degree_constrained=False, enumerate_all=True, budget=budget)
    if report.min_l0 != sharp_bound(2, d):
        raise AssertionError(f"reduced search found minimum {report.min_l0}, expected {sharp_bound(2, d)}")
    return sorted(report.polynomials, key=Poly.sort_key)


def uniqueness_holds(d: int, budget: SearchBudget | None = None) -> bool:
    from .families import invariant_poly

    p = invariant_poly(d)
    return set(uniqueness_test(d, budget)) == {p, p.swap()}


def symmetric_min_terms(d: int, budget: SearchBudget | None = None) -> tuple[int, list[Poly]]:
    """Fewest monomials in a symmetric solution of degree exactly ``d``, with all witnesses."""
    report = min_l0(build_symmetric(d), degree_constrained=True, enumerate_all=True, budget=budget)
    return report.min_l0, sorted(report.polynomials, key=Poly.sort_key)
