import random

import pytest

from conftest import random_valid_poly, random_valid_polys
from sharpmap.families import invariant_poly
from sharpmap.newton import (
    TraceNotFound,
    build_graph,
    dehomogenize_trace,
    sink_certificate,
)
from sharpmap.poly import Poly, parse_poly

x, y = Poly.var(2, 0), Poly.var(2, 1)
s = x + y
P5 = invariant_poly(5)


def test_p5_quotient_and_sinks():
    graph = build_graph(P5)
    assert graph.quotient == parse_poly(
        "1 + x + y + x^2 + 2*x*y + y^2 + x^3 + 3*x^2*y - 2*x*y^2 + y^3 + x^4 - x^3*y + x^2*y^2 - x*y^3 + y^4"
    )
    assert graph.sinks == {(5, 0), (3, 1), (1, 2), (0, 5)}
    assert graph.sources == {(0, 0)}
    assert graph.label((1, 2)) == "N" and graph.label((2, 1)) == "P" and graph.label((9, 9)) == "Z"


def test_pure_power_graph():
    graph = build_graph(s**3)
    # every quotient coefficient is positive, so the sinks are the degree-3 points
    assert set(graph.labels.values()) == {"P"}
    assert graph.sinks == {(3, 0), (2, 1), (1, 2), (0, 3)}
    assert sink_certificate(s**3) == (4, 4, True)


@pytest.mark.parametrize("d, sinks", [(3, 3), (5, 4), (7, 5)])
def test_invariant_certificates(d, sinks):
    cert = sink_certificate(invariant_poly(d))
    assert cert.holds and cert.sinks == sinks == cert.terms


def test_graph_rejects_invalid_input():
    with pytest.raises(ValueError):
        build_graph(x * x)
    with pytest.raises(ValueError):
        build_graph(2 * s)
    with pytest.raises(ValueError):
        build_graph(Poly.linear_sum(3))


def test_arrows_follow_labels():
    graph = build_graph(P5)
    for src, dst in graph.arrows:
        step = (dst[0] - src[0], dst[1] - src[1])
        if step in {(1, 0), (0, 1)}:
            assert graph.label(src) == "P"
        else:
            assert step in {(-1, 0), (0, -1)} and graph.label(dst) == "N"


def test_sink_forces_positive_coefficient():
    rng = random.Random(3)
    for _ in range(200):
        p = random_valid_poly(rng)
        for a, b in build_graph(p).sinks:
            assert p.coeff((a, b)) > 0


def test_sink_certificate_on_random_polynomials():
    polys = random_valid_polys(1000, 20240611)
    for p in polys:
        assert p.hyperplane_value() == 1 and p.is_nonnegative()
        cert = sink_certificate(p)
        assert cert.holds


def test_origin_is_only_source():
    for p in random_valid_polys(1000, 20240611)[:300]:
        # q has constant term 1, and a positive point other than the origin
        # always has a positive predecessor when p is nonnegative
        assert build_graph(p).sources == {(0, 0)}


def test_dot_and_json():
    graph = build_graph(s**2)
    dot = graph.to_dot()
    assert dot.startswith("digraph G {") and '"0,0" -> "1,0";' in dot
    data = graph.to_json()
    assert data["sources"] == [[0, 0]]
    assert data["sinks"] == [[0, 2], [1, 1], [2, 0]]


def test_trace_p5():
    trace = dehomogenize_trace(s**5, P5)
    assert trace[-1] == P5
    assert len(trace) == 4
    assert x**5 + 5 * x**3 * y + 5 * x**2 * y**2 + 5 * x * y**3 + y**5 in trace
    prev = s**5
    for p in trace:
        assert p.is_nonnegative() and p.hyperplane_value() == 1
        h, r = (prev - p).divide_by_affine()
        assert r == 0 and h.term_count == 1
        prev = p


def test_trace_small_cases():
    assert dehomogenize_trace(s**3, invariant_poly(3)) == [invariant_poly(3)]
    assert dehomogenize_trace(s**4, s**4) == []


def test_trace_unreachable():
    # the target's quotient exceeds the start's at x^2, so no sequence of moves reaches it
    target = s**3 + x**2 * (s - 1)
    with pytest.raises(TraceNotFound):
        dehomogenize_trace(s**3, target)


def test_trace_input_checks():
    with pytest.raises(ValueError):
        dehomogenize_trace(P5, P5)
    with pytest.raises(ValueError):
        dehomogenize_trace(s**5, invariant_poly(3))


@pytest.mark.parametrize("d", range(1, 7))
def test_power_of_linear_form(d):
    graph = build_graph(s**d)
    assert all(graph.label((a, b)) == "P" for a in range(d) for b in range(d - a))
    assert graph.sinks == {(a, d - a) for a in range(d + 1)}


def test_linear_form():
    graph = build_graph(s)
    assert graph.quotient == Poly.const(2, 1)
    assert graph.sinks == {(1, 0), (0, 1)}
    assert dehomogenize_trace(s, s) == []


@pytest.mark.parametrize("d", range(1, 16, 2))
def test_certificate_is_tight_on_invariant_family(d):
    cert = sink_certificate(invariant_poly(d))
    assert cert.sinks == cert.terms == (d + 3) // 2


def test_quotient_reconstructs():
    for p in random_valid_polys(1000, 20240611)[:200]:
        assert build_graph(p).quotient * (s - 1) + 1 == p
