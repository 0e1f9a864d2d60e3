"""Command line entry point ``sharpmap``.

Exit codes: 0 success, 1 usage or input error, 2 search budget exhausted.
Every number is printed as an exact ``num/den`` string.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import certify, families, lp, newton, search
from .poly import Poly, format_fraction
from .systems import SymmetricBasisElement, build_eliminated, build_homogenized, build_symmetric, reduce_support

EXIT_OK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--max-support", type=_positive, default=64)
    common.add_argument("--max-combinations", type=_positive, default=5_000_000)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--output", "--json", dest="output", default=None, help="write the result here instead of stdout")

    parser = _Parser(prog="sharpmap", description="Sparse nonnegative solutions for monomial sphere maps.")
    parser.add_argument("--config", default=None, help="key=value file of default flags")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("system", parents=[common], help="emit a linear system")
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--kind", choices=["homogenized", "eliminated", "symmetric"], default="homogenized")
    p.add_argument("--reduce", action="store_true")
    p.add_argument("--constant", action="store_true", help="include the constant column")

    p = sub.add_parser("search", parents=[common], help="minimum-L0 search")
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--all", action="store_true", help="enumerate every minimal witness")
    p.add_argument("--unconstrained", action="store_true", help="drop the top-degree requirement")
    p.add_argument("--reduce", action="store_true", help="search the reduced system (n=2, odd d)")

    p = sub.add_parser("uniqueness", parents=[common], help="all sharp polynomials of odd degree d")
    p.add_argument("--d", type=_positive, required=True)

    p = sub.add_parser("symmetric", parents=[common], help="fewest terms of a symmetric example")
    p.add_argument("--d", type=_positive, required=True)

    p = sub.add_parser("l1min", parents=[common], help="minimize the coefficient sum")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--basis", choices=["symmetric", "homogenized"], default="symmetric")
    p.add_argument("--pin-top", action="store_true", help="fix x^d and y^d to 1")
    p.add_argument("--constant", action="store_true")
    p.add_argument("--all-optima", action="store_true", help="list every optimal vertex")

    p = sub.add_parser("family", parents=[common], help="closed-form families")
    p.add_argument("--kind", choices=["invariant", "whitney", "substitute", "tensor"], required=True)
    p.add_argument("--d", type=_positive, default=None)
    p.add_argument("--n", type=_positive, default=3)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--c", type=_fraction, default=None)
    p.add_argument("--w-steps", type=int, default=0)
    p.add_argument("--v-steps", type=int, default=0)

    p = sub.add_parser("graph", parents=[common], help="Newton diagram of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--dot", default=None, help="also write Graphviz text here")

    p = sub.add_parser("verify", parents=[common], help="sharpness certificate")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=_positive, default=None)
    return parser


def read_config(path: str) -> list[str]:
    """Turn ``key=value`` lines into flags; ``true``/``false`` toggle switches."""
    tokens = []
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        flag = "--" + key.strip().replace("_", "-")
        value = value.strip()
        if value.lower() == "true":
            tokens.append(flag)
        elif value.lower() != "false":
            tokens.extend([flag, value])
    return tokens


def _split_config(argv: list[str]) -> list[str]:
    """Insert config-file flags right after the subcommand so explicit flags win."""
    argv = list(argv)
    config = None
    if "--config" in argv:
        i = argv.index("--config")
        if i + 1 >= len(argv):
            raise UsageError("--config needs a path")
        config = argv[i + 1]
        del argv[i:i + 2]
    else:
        for i, a in enumerate(argv):
            if a.startswith("--config="):
                config = a.split("=", 1)[1]
                del argv[i]
                break
    if config is None or not argv:
        return argv
    return argv[:1] + read_config(config) + argv[1:]


def _load_poly(path: str) -> Poly:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(data, dict) and "subject" in data and "terms" not in data:
        data = data["subject"]
    try:
        return Poly.from_json(data)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _budget(args) -> search.SearchBudget:
    return search.SearchBudget(args.max_support, args.max_combinations, args.workers)


def _report_json(report: search.SearchReport, ncols: int) -> dict:
    return {
        "min_l0": report.min_l0 if report.min_l0 != math.inf else "inf",
        "witnesses": [
            {
                "support": list(w.support),
                "values": {str(j): format_fraction(v) for j, v in sorted(w.values.items())},
                "l0": w.l0,
                "l1": format_fraction(w.l1),
                "polynomial": w.polynomial.to_json(),
            }
            for w in report.witnesses
        ],
        "nodes_explored": report.nodes_explored,
        "prunes_by_certificate": report.prunes_by_certificate,
    }


def _poly_entry(p: Poly) -> dict:
    return {"polynomial": p.to_json(), "l0": p.term_count, "l1": format_fraction(p.coeff_sum), "text": str(p)}


def run(args) -> dict:
    cmd = args.command
    if cmd == "system":
        if args.kind == "homogenized":
            sys_ = build_homogenized(args.n, args.d, include_constant=args.constant)
            if args.reduce:
                sys_ = reduce_support(sys_)
        elif args.reduce or args.constant:
            raise UsageError("--reduce and --constant apply to the homogenized kind only")
        elif args.kind == "eliminated":
            sys_ = build_eliminated(args.n, args.d)
        else:
            sys_ = build_symmetric(args.d)
        return sys_.to_json()

    if cmd == "search":
        sys_ = build_homogenized(args.n, args.d)
        if args.reduce:
            sys_ = reduce_support(sys_)
        report = search.min_l0(sys_, not args.unconstrained, args.all, _budget(args))
        return {"n": args.n, "d": args.d, "sharp_bound": search.sharp_bound(args.n, args.d), **_report_json(report, len(sys_.columns))}

    if cmd == "uniqueness":
        polys = search.uniqueness_test(args.d, _budget(args))
        p = families.invariant_poly(args.d)
        return {
            "d": args.d,
            "count": len(polys),
            "uniqueness_holds": set(polys) == {p, p.swap()},
            "polynomials": [_poly_entry(q) for q in polys],
        }

    if cmd == "symmetric":
        count, polys = search.symmetric_min_terms(args.d, _budget(args))
        return {
            "d": args.d,
            "min_terms": count if count != math.inf else "inf",
            "sharp_bound": (args.d + 3) // 2,
            "attains_bound": count == (args.d + 3) // 2,
            "witnesses": [_poly_entry(q) for q in polys],
        }

    if cmd == "l1min":
        d = args.d
        if args.basis == "symmetric":
            if args.constant:
                raise UsageError("--constant applies to the homogenized basis only")
            sys_ = build_symmetric(d)
            objective = [c.weight for c in sys_.columns]
            pins = {sys_.columns.index(SymmetricBasisElement(0, d)): 1} if args.pin_top else {}
        else:
            sys_ = build_homogenized(2, d, include_constant=args.constant)
            objective = [1] * len(sys_.columns)
            pins = {sys_.columns.index((d, 0)): 1, sys_.columns.index((0, d)): 1} if args.pin_top else {}
        problem = lp.LPProblem(tuple(objective), sys_, pins)
        result = lp.minimize(problem)
        out = {"d": d, "basis": args.basis, "status": result.status}
        if result.optimal:
            poly = sys_.assemble(result.point)
            out.update(value=format_fraction(result.value), minimizer=poly.to_json(), text=str(poly))
            if args.all_optima:
                optima = lp.enumerate_vertex_optima(problem)
                out["optima"] = [sys_.assemble(r.point).to_json() for r in optima]
        return out

    if cmd == "family":
        if args.kind == "invariant":
            if args.d is None:
                raise UsageError("--d is required")
            return _poly_entry(families.invariant_poly(args.d))
        if args.kind == "whitney":
            if args.d is None:
                raise UsageError("--d is required")
            return _poly_entry(families.whitney_poly(args.n, args.d))
        if args.kind == "tensor":
            return _poly_entry(families.tensor_word(args.n, args.w_steps, args.v_steps))
        missing = [k for k in ("d", "m", "a", "b", "c") if getattr(args, k) is None]
        if missing:
            raise UsageError(f"substitute needs --{', --'.join(missing)}")
        try:
            res = families.substitute(args.d, args.m, args.a, args.b, args.c)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return {**_poly_entry(res.poly), "nonnegative": res.nonnegative}

    if cmd == "graph":
        poly = _load_poly(args.poly)
        try:
            graph = newton.build_graph(poly)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.dot:
            Path(args.dot).write_text(graph.to_dot())
        cert = newton.sink_certificate(poly)
        return {**graph.to_json(), "certificate": {"sinks": cert.sinks, "terms": cert.terms, "holds": cert.holds}}

    if cmd == "verify":
        poly = _load_poly(args.poly)
        return certify.verify_sharp(poly, args.n).to_json()
    raise UsageError(f"unknown command {cmd}")


def _as_text(result: dict) -> str:
    lines = []
    for key, value in result.items():
        if isinstance(value, dict) and "terms" in value and "nvars" in value:
            value = str(Poly.from_json(value))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for item in value:
                if "text" in item:
                    lines.append(f"  {item['text']}")
                elif "polynomial" in item:
                    lines.append(f"  {Poly.from_json(item['polynomial'])}")
                elif "name" in item:
                    lines.append(f"  [{'pass' if item['pass'] else 'FAIL'}] {item['name']}: {item['detail']}")
                elif "nvars" in item:
                    lines.append(f"  {Poly.from_json(item)}")
                else:
                    lines.append(f"  {json.dumps(item)}")
            continue
        lines.append(f"{key}: {value if not isinstance(value, (dict, list)) else json.dumps(value)}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(_split_config(argv))
        result = run(args)
    except UsageError as exc:
        print(f"sharpmap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except search.BudgetExceeded as exc:
        print(f"sharpmap: budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"sharpmap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(result, indent=2) + "\n" if args.format == "json" else _as_text(result)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
