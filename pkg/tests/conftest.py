import functools
import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sharpmap.poly import Poly

settings.register_profile(
    "exact",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def polys(draw, nvars=None, max_degree=4, max_terms=6):
    n = draw(st.integers(2, 3)) if nvars is None else nvars
    exps = st.tuples(*[st.integers(0, max_degree) for _ in range(n)]).filter(lambda e: sum(e) <= max_degree)
    terms = draw(st.dictionaries(exps, fractions, max_size=max_terms))
    return Poly(n, terms)


@st.composite
def hyperplane_points(draw, n):
    """Rational points with coordinates summing to 1."""
    head = [draw(fractions) for _ in range(n - 1)]
    return head + [1 - sum(head, Fraction(0))]


def random_valid_poly(rng: random.Random, steps: int | None = None) -> Poly:
    """A nonnegative polynomial equal to 1 on x + y = 1 with no constant term.

    Starts from x + y and repeatedly moves a random fraction of a random term
    ``c m`` to ``c m (x + y)``, which preserves both properties.
    """
    p = Poly.linear_sum(2)
    s = Poly.linear_sum(2)
    for _ in range(rng.randint(0, 7) if steps is None else steps):
        exp, coef = rng.choice(sorted(p.items()))
        frac = Fraction(rng.randint(1, 4), 4)
        piece = Poly.monomial(exp, coef * frac)
        p = p - piece + piece * s
    return p


@pytest.fixture
def rng():
    return random.Random(20240611)


@functools.lru_cache(maxsize=None)
def full_search(n: int, d: int, constrained: bool = True):
    """Cached exhaustive search on the full homogenized system."""
    from sharpmap.search import min_l0
    from sharpmap.systems import build_homogenized

    return min_l0(build_homogenized(n, d), degree_constrained=constrained, enumerate_all=True)


def random_system_solution(rng: random.Random) -> Poly:
    """A random nonnegative solution of a small homogenized system: a convex
    combination of two LP vertices reached from random objectives."""
    from sharpmap.lp import LPProblem, minimize
    from sharpmap.systems import build_homogenized

    system = build_homogenized(2, rng.randint(1, 6))
    points = []
    for _ in range(2):
        cost = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in system.columns)
        points.append(minimize(LPProblem(cost, system)).point)
    lam = Fraction(rng.randint(0, 8), 8)
    return system.assemble([lam * a + (1 - lam) * b for a, b in zip(*points)])


@functools.lru_cache(maxsize=None)
def random_valid_polys(count: int, seed: int) -> tuple[Poly, ...]:
    rng = random.Random(seed)
    return tuple(random_system_solution(rng) if k % 2 else random_valid_poly(rng) for k in range(count))


# -- acceptance reporting -----------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        _criteria[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d} {status}: {title}")
