"""Linear systems whose nonnegative solutions are monomial sphere maps.

Three constructions are provided.  ``build_homogenized`` equates coefficients
of ``sum c_a x^a s(x)^(d-|a|) = s(x)^d``; it has nonnegative integer entries
and multinomial right-hand side.  ``build_eliminated`` substitutes
``x_n = 1 - sum x_j`` and equates coefficients against the constant 1.
``build_symmetric`` works in the basis ``(xy)^a (x^b + y^b)``.
``reduce_support`` shrinks the two-variable odd-degree system by fixing the
forced coefficients of minimal-term solutions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .poly import Exponent, Poly, format_fraction, monomials, monomials_upto, multinomial, parse_fraction


@dataclass(frozen=True)
class SymmetricBasisElement:
    """The polynomial ``(xy)^a (x^b + y^b)``, or ``(xy)^a`` when ``b == 0``."""

    a: int
    b: int

    @property
    def weight(self) -> int:
        """Number of monomials contributed."""
        return 1 if self.b == 0 else 2

    @property
    def degree(self) -> int:
        return 2 * self.a + self.b

    def poly(self) -> Poly:
        if self.b == 0:
            return Poly(2, {(self.a, self.a): 1})
        return Poly(2, {(self.a + self.b, self.a): 1, (self.a, self.a + self.b): 1})


@dataclass(frozen=True)
class LinearSystem:
    """Exact system ``matrix @ u = rhs`` over the columns' unknown coefficients.

    ``columns`` are exponent vectors (``kind`` homogenized/eliminated) or
    :class:`SymmetricBasisElement` (``kind`` symmetric).  ``fixed`` holds
    terms already pinned by a reduction; they belong to every solution's
    polynomial but are not unknowns.
    """

    kind: str
    n: int
    d: int
    columns: tuple
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    distinguished: frozenset[int]
    rows: tuple = ()
    fixed: tuple[tuple[Exponent, Fraction], ...] = ()
    reduced: bool = False
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if len(self.matrix) != len(self.rhs):
            raise ValueError("row count of matrix and rhs length differ")
        for row in self.matrix:
            if len(row) != len(self.columns):
                raise ValueError("matrix row length differs from column count")
        if not self.weights:
            object.__setattr__(self, "weights", tuple(self.column_weight(j) for j in range(len(self.columns))))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.matrix), len(self.columns)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.matrix)

    def column_weight(self, j: int) -> int:
        col = self.columns[j]
        return col.weight if isinstance(col, SymmetricBasisElement) else 1

    def column_poly(self, j: int) -> Poly:
        """The polynomial a unit value of column ``j`` contributes."""
        col = self.columns[j]
        if isinstance(col, SymmetricBasisElement):
            return col.poly()
        return Poly.monomial(col)

    def fixed_poly(self) -> Poly:
        nv = 2 if self.kind == "symmetric" else self.n
        return Poly(nv, dict(self.fixed))

    def assemble(self, values: dict[int, Fraction] | Sequence[Fraction]) -> Poly:
        """Polynomial with the given column values plus the fixed terms."""
        if not isinstance(values, dict):
            values = {j: v for j, v in enumerate(values) if v}
        out = self.fixed_poly()
        for j, v in sorted(values.items()):
            out = out + self.column_poly(j) * v
        return out

    def coefficient_vector(self, p: Poly) -> list[Fraction]:
        """Column values representing ``p`` (inverse of :meth:`assemble`).

        Raises ``ValueError`` if ``p`` is not in the span of the columns plus
        the fixed terms.
        """
        rest = p - self.fixed_poly()
        values = []
        for j, col in enumerate(self.columns):
            if isinstance(col, SymmetricBasisElement):
                e = (col.a + col.b, col.a)
            else:
                e = col
            values.append(rest.coeff(e))
        if self.assemble(values) != p:
            raise ValueError("polynomial is not representable in this system's columns")
        return values

    def residual(self, values: Sequence[Fraction]) -> list[Fraction]:
        return [sum((a * u for a, u in zip(row, values)), Fraction(0)) - b for row, b in zip(self.matrix, self.rhs)]

    def is_solution(self, values: Sequence[Fraction]) -> bool:
        return all(r == 0 for r in self.residual(values))

    def to_json(self) -> dict:
        def col_json(c):
            return [c.a, c.b] if isinstance(c, SymmetricBasisElement) else list(c)

        out = {
            "kind": self.kind,
            "n": self.n,
            "d": self.d,
            "columns": [col_json(c) for c in self.columns],
            "matrix": [[format_fraction(v) for v in row] for row in self.matrix],
            "rhs": [format_fraction(v) for v in self.rhs],
            "distinguished": sorted(self.distinguished),
            "rows": [list(r) for r in self.rows],
        }
        if self.reduced:
            out["reduced"] = True
            out["fixed"] = [{"exp": list(e), "coef": format_fraction(c)} for e, c in self.fixed]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "LinearSystem":
        for key in ("kind", "n", "d", "columns", "matrix", "rhs", "distinguished"):
            if key not in data:
                raise ValueError(f"system JSON: missing field {key!r}")
        kind = data["kind"]
        if kind not in ("homogenized", "eliminated", "symmetric"):
            raise ValueError(f"system JSON: unknown kind {kind!r}")
        if kind == "symmetric":
            columns = tuple(SymmetricBasisElement(a, b) for a, b in data["columns"])
        else:
            columns = tuple(tuple(c) for c in data["columns"])
        fixed = tuple((tuple(t["exp"]), parse_fraction(t["coef"])) for t in data.get("fixed", []))
        return cls(
            kind=kind,
            n=data["n"],
            d=data["d"],
            columns=columns,
            matrix=tuple(tuple(parse_fraction(v) for v in row) for row in data["matrix"]),
            rhs=tuple(parse_fraction(v) for v in data["rhs"]),
            distinguished=frozenset(data["distinguished"]),
            rows=tuple(tuple(r) for r in data.get("rows", [])),
            fixed=fixed,
            reduced=bool(data.get("reduced", False)),
        )


def _homogenized_entry(beta: Exponent, alpha: Exponent, d: int) -> int:
    """Coefficient of ``x^beta`` in ``x^alpha s(x)^(d - |alpha|)``."""
    diff = [b - a for a, b in zip(alpha, beta)]
    if any(t < 0 for t in diff):
        return 0
    return multinomial(diff)


def build_homogenized(n: int, d: int, include_constant: bool = False) -> LinearSystem:
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    columns = tuple(monomials_upto(n, d, start=0 if include_constant else 1))
    rows = tuple(monomials(n, d))
    matrix = tuple(tuple(Fraction(_homogenized_entry(beta, alpha, d)) for alpha in columns) for beta in rows)
    rhs = tuple(Fraction(multinomial(beta)) for beta in rows)
    distinguished = frozenset(j for j, a in enumerate(columns) if sum(a) == d)
    return LinearSystem("homogenized", n, d, columns, matrix, rhs, distinguished, rows=rows)


def build_eliminated(n: int, d: int) -> LinearSystem:
    """System from substituting ``x_n = 1 - (x_1 + ... + x_{n-1})``.

    Rows are the monomials ``t^mu`` with ``|mu| <= d`` in the first ``n - 1``
    variables (stored as length-``n`` exponents with last entry 0); the
    right-hand side is 1 on the constant row and 0 elsewhere.
    """
    if n < 2 or d < 1:
        raise ValueError("need n >= 2 and d >= 1")
    columns = tuple(monomials_upto(n, d, start=1))
    rows = tuple(mu + (0,) for mu in monomials_upto(n - 1, d))
    row_index = {mu: i for i, mu in enumerate(rows)}
    matrix = [[Fraction(0)] * len(columns) for _ in rows]
    for j, alpha in enumerate(columns):
        restricted = Poly.monomial(alpha).restrict_to_hyperplane()
        for mu, c in restricted.items():
            matrix[row_index[mu]][j] = c
    rhs = tuple(Fraction(int(i == 0)) for i in range(len(rows)))
    distinguished = frozenset(j for j, a in enumerate(columns) if sum(a) == d)
    return LinearSystem(
        "eliminated", n, d, columns, tuple(tuple(r) for r in matrix), rhs, distinguished, rows=rows
    )


def symmetric_basis(d: int) -> list[SymmetricBasisElement]:
    """All ``(a, b) != (0, 0)`` with ``2a + b <= d``, ordered by degree then ``a``."""
    out = [SymmetricBasisElement(a, b) for a in range(d // 2 + 1) for b in range(d - 2 * a + 1) if (a, b) != (0, 0)]
    out.sort(key=lambda e: (e.degree, e.a))
    return out


def build_symmetric(d: int) -> LinearSystem:
    if d < 1 or d % 2 == 0:
        raise ValueError("the symmetric system is posed for odd d >= 1")
    columns = tuple(symmetric_basis(d))
    rows = tuple(monomials(2, d))
    homs = [c.poly().homogenize(d) for c in columns]
    matrix = tuple(tuple(h.coeff(beta) for h in homs) for beta in rows)
    rhs = tuple(Fraction(comb(d, beta[0])) for beta in rows)
    distinguished = frozenset(j for j, c in enumerate(columns) if c.degree == d)
    return LinearSystem("symmetric", 2, d, columns, matrix, rhs, distinguished, rows=rows)


def reduce_support(system: LinearSystem) -> LinearSystem:
    """Fix the coefficients every minimal-term solution must have.

    For two variables and odd ``d`` the pure powers ``x^j, y^j`` (``j < d``)
    and the mixed top-degree monomials vanish, and ``x^d, y^d`` have
    coefficient 1.  The two rows that become ``0 = 0`` are dropped.
    """
    if system.kind != "homogenized" or system.n != 2 or system.reduced:
        raise ValueError("reduce_support needs an unreduced two-variable homogenized system")
    d = system.d
    if d % 2 == 0:
        raise ValueError("reduce_support needs odd d")
    pinned = {(d, 0): Fraction(1), (0, d): Fraction(1)}
    keep = [j for j, (a, b) in enumerate(system.columns) if a > 0 and b > 0 and a + b < d]
    rhs = list(system.rhs)
    for j, col in enumerate(system.columns):
        if col in pinned:
            for i, row in enumerate(system.matrix):
                rhs[i] -= row[j] * pinned[col]
    rows, matrix, new_rhs = [], [], []
    for i, row in enumerate(system.matrix):
        entries = tuple(row[j] for j in keep)
        if rhs[i] == 0 and not any(entries):
            continue
        rows.append(system.rows[i])
        matrix.append(entries)
        new_rhs.append(rhs[i])
    return LinearSystem(
        "homogenized",
        2,
        d,
        tuple(system.columns[j] for j in keep),
        tuple(matrix),
        tuple(new_rhs),
        frozenset(),
        rows=tuple(rows),
        fixed=tuple(sorted(pinned.items())),
        reduced=True,
    )
