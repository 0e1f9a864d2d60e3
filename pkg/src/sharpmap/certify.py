"""Self-contained certificates for candidate sphere-map polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .families import tensor_word
from .newton import build_graph
from .poly import Poly, format_fraction
from .search import sharp_bound


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class Certificate:
    subject: Poly
    checks: tuple[Check, ...]

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {
            "subject": self.subject.to_json(),
            "checks": [c.to_json() for c in self.checks],
            "verdict": "pass" if self.verdict else "fail",
        }


def verify_sharp(p: Poly, n: int | None = None) -> Certificate:
    """Check that ``p`` is a minimal-term example of its degree.

    Failures are recorded in the certificate, never raised.
    """
    n = p.nvars if n is None else n
    checks = []
    d, N = p.degree, p.term_count

    if n != p.nvars:
        checks.append(Check("variables", False, f"polynomial has {p.nvars} variables, expected {n}"))
        return Certificate(p, tuple(checks))

    value = p.hyperplane_value()
    checks.append(Check(
        "hyperplane_identity",
        value == 1,
        "p = 1 on s(x) = 1" if value == 1 else (f"p = {format_fraction(value)} on s(x) = 1" if value is not None else "p is not constant on s(x) = 1"),
    ))
    negatives = [e for e, c in p.items() if c < 0]
    checks.append(Check("nonnegative", not negatives, f"negative coefficients at {negatives}" if negatives else "all coefficients positive"))
    checks.append(Check("degree", d >= 1, f"degree {d}"))
    if d < 1 or n < 2:
        return Certificate(p, tuple(checks))

    bound = sharp_bound(n, d)
    checks.append(Check("sharp_term_count", N == bound, f"N = {N}, minimal N for degree {d} is {bound}"))
    if n == 2:
        checks.append(Check("degree_bound", d <= 2 * N - 3, f"d = {d} <= 2N - 3 = {2 * N - 3}"))
    else:
        checks.append(Check("degree_bound", N >= d * (n - 1) + 1, f"N = {N} >= d(n-1) + 1 = {d * (n - 1) + 1}"))

    if n == 2 and d % 2 == 1 and N == bound:
        top = (p.coeff((d, 0)), p.coeff((0, d)))
        checks.append(Check(
            "top_terms",
            top == (1, 1),
            f"coefficients of x^{d}, y^{d} are {format_fraction(top[0])}, {format_fraction(top[1])}",
        ))
    if n == 2:
        if value == 1:
            sinks = len(build_graph(p).sinks)
            checks.append(Check("sink_certificate", N >= sinks, f"{sinks} sinks <= {N} terms"))
        else:
            checks.append(Check("sink_certificate", False, "needs p = 1 on the line"))
    return Certificate(p, tuple(checks))


def gap_admissible(n: int, N: int) -> bool:
    """False when ``N`` lies in one of the two known gaps for source dimension ``n``."""
    if n < 1 or N < 1:
        raise ValueError("n and N must be positive")
    return not (1 < N < n or n < N < 2 * n - 2)


def tensor_threshold(n: int) -> int:
    return n * n - 2 * n + 2


def target_minimal_census(n: int, max_N: int) -> dict[int, Poly | None]:
    """For each ``N <= max_N``, a polynomial with exactly ``N`` terms built by
    ``V^k W^j s(x)``, or ``None`` when no such word exists."""
    if n < 2:
        raise ValueError("census needs n >= 2")
    out: dict[int, Poly | None] = {}
    for N in range(1, max_N + 1):
        found = None
        # term count of V^k W^j s(x) is n + j(n-1) + k n
        for k in range(0, N // n + 1):
            rest = N - n - k * n
            if rest >= 0 and rest % (n - 1) == 0:
                found = tensor_word(n, rest // (n - 1), k)
                break
        if found is not None and found.term_count != N:
            raise AssertionError(f"word for N = {N} produced {found.term_count} terms")
        out[N] = found
    missing = [N for N, p in out.items() if p is None and N >= tensor_threshold(n)]
    if missing:
        raise AssertionError(f"no witness for N = {missing} above the threshold {tensor_threshold(n)}")
    return out
