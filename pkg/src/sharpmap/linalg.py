"""Small exact linear algebra over Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None):
    """Reduced row echelon form of ``rows``; pivots searched in the first ``ncols`` columns.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return [], []
    width = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(width):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m if any(row)], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def solve_unique(columns: Sequence[Sequence], rhs: Sequence) -> tuple[str, list[Fraction] | None]:
    """Solve ``sum_j u_j * columns[j] = rhs``.

    Returns ``("unique", u)``, ``("dependent", None)`` when the columns are
    linearly dependent, or ``("inconsistent", None)``.
    """
    k = len(columns)
    m = len(rhs)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    red, pivots = rref(aug, ncols=k)
    if any(all(v == 0 for v in row[:k]) and row[k] != 0 for row in red):
        return "inconsistent", None
    if len(pivots) < k:
        return "dependent", None
    sol = [Fraction(0)] * k
    for row, c in zip(red, pivots):
        sol[c] = row[k]
    return "unique", sol


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """A basis of the right null space."""
    red, pivots = rref(rows, ncols=ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
