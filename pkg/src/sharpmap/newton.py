"""Directed Newton diagrams of ``q = (p - 1) / (x + y - 1)``.

Each lattice point ``(a, b)`` is labeled by the sign of the coefficient of
``x^a y^b`` in ``q``.  A positive point sends arrows to ``(a+1, b)`` and
``(a, b+1)``; a negative point receives arrows from them.  A sink at
``(a, b)`` forces a positive coefficient of ``x^a y^b`` in ``p`` because

    coeff_p(a, b) = q(a-1, b) + q(a, b-1) - q(a, b)

and at a sink every term on the right is nonnegative with at least one
positive.  So the number of sinks never exceeds the number of terms of ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .poly import Poly

Point = tuple[int, int]


@dataclass(frozen=True)
class NewtonGraph:
    quotient: Poly
    domain: frozenset[Point]
    labels: dict
    arrows: frozenset[tuple[Point, Point]]
    sinks: frozenset[Point]
    sources: frozenset[Point]

    def label(self, point: Point) -> str:
        return self.labels.get(point, "Z")

    def to_dot(self) -> str:
        """Graphviz text: one node or edge per line."""
        lines = ["digraph G {"]
        for a, b in sorted(self.domain):
            role = " sink" if (a, b) in self.sinks else (" source" if (a, b) in self.sources else "")
            lines.append(f'  "{a},{b}" [label="{self.label((a, b))}{role}", pos="{a},{b}!"];')
        for (a, b), (c, d) in sorted(self.arrows):
            lines.append(f'  "{a},{b}" -> "{c},{d}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "quotient": self.quotient.to_json(),
            "labels": [{"point": list(p), "label": self.label(p)} for p in sorted(self.domain)],
            "arrows": [[list(s), list(t)] for s, t in sorted(self.arrows)],
            "sinks": [list(p) for p in sorted(self.sinks)],
            "sources": [list(p) for p in sorted(self.sources)],
        }


def _quotient(p: Poly) -> Poly:
    if p.nvars != 2:
        raise ValueError("Newton diagrams are defined for two variables")
    try:
        q, r = p.divide_by_affine()
    except ValueError:
        raise ValueError("polynomial is not identically 1 on x + y = 1") from None
    if r != 1:
        raise ValueError(f"polynomial equals {r}, not 1, on x + y = 1")
    return q


def build_graph(p: Poly) -> NewtonGraph:
    q = _quotient(p)
    labels = {e: ("P" if c > 0 else "N") for e, c in q.items()}
    arrows = set()
    for (a, b), lab in labels.items():
        for nb in ((a + 1, b), (a, b + 1)):
            arrows.add(((a, b), nb) if lab == "P" else (nb, (a, b)))
    incoming: dict[Point, int] = {}
    outgoing: dict[Point, int] = {}
    for s, t in arrows:
        outgoing[s] = outgoing.get(s, 0) + 1
        incoming[t] = incoming.get(t, 0) + 1
    domain = frozenset(labels) | frozenset(incoming) | frozenset(outgoing)
    sinks = frozenset(v for v in domain if incoming.get(v) and not outgoing.get(v))
    sources = frozenset(v for v in domain if outgoing.get(v) and not incoming.get(v))
    return NewtonGraph(q, domain, labels, frozenset(arrows), sinks, sources)


class SinkCertificate(NamedTuple):
    sinks: int
    terms: int
    holds: bool


class CertificateViolation(AssertionError):
    """More sinks than terms for a nonnegative polynomial: a bug, never data."""


def sink_certificate(p: Poly) -> SinkCertificate:
    graph = build_graph(p)
    cert = SinkCertificate(len(graph.sinks), p.term_count, p.term_count >= len(graph.sinks))
    if not cert.holds and p.is_nonnegative():
        raise CertificateViolation(f"{cert.sinks} sinks but only {cert.terms} terms in {p}")
    return cert


# -- dehomogenization walks ---------------------------------------------------


class TraceNotFound(RuntimeError):
    pass


def dehomogenize_trace(start: Poly, target: Poly, max_nodes: int = 100_000) -> list[Poly]:
    """Polynomials visited while dehomogenizing ``start`` into ``target``.

    One move replaces ``c m (x + y)`` by ``c m`` for a monomial ``m``; every
    intermediate polynomial stays nonnegative and equal to 1 on the line.
    The returned list excludes ``start`` and ends with ``target`` (empty when
    they are equal).  Since both sides equal 1 on the line, their difference
    is ``(x + y - 1) h`` and the moves are exactly the terms of ``h``; only
    their order is searched, depth first, trying higher-degree terms first.
    """
    if start.nvars != 2 or target.nvars != 2:
        raise ValueError("traces are defined for two variables")
    if not start.is_homogeneous():
        raise ValueError("start must be homogeneous")
    if start.degree != target.degree:
        raise ValueError("start and target must have the same degree")
    h = _quotient(start) - _quotient(target)
    if not h.is_nonnegative():
        raise TraceNotFound("target is not reachable by dehomogenization moves from start")
    moves = sorted(h.items(), key=lambda t: (-sum(t[0]), tuple(-k for k in t[0])))
    nodes = 0
    seen = set()

    def step(current: Poly, remaining: tuple) -> list[Poly] | None:
        nonlocal nodes
        if not remaining:
            return []
        if remaining in seen:
            return None
        nodes += 1
        if nodes > max_nodes:
            raise TraceNotFound(f"no trace within {max_nodes} nodes")
        for k, ((a, b), c) in enumerate(remaining):
            if current.coeff((a + 1, b)) >= c and current.coeff((a, b + 1)) >= c:
                piece = Poly.monomial((a, b), c)
                nxt = current - piece * Poly.linear_sum(2) + piece
                rest = step(nxt, remaining[:k] + remaining[k + 1:])
                if rest is not None:
                    return [nxt] + rest
        seen.add(remaining)
        return None

    trace = step(start, tuple(moves))
    if trace is None:
        raise TraceNotFound("no ordering of the moves keeps every step nonnegative")
    return trace
