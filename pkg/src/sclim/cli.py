"""Command-line front end.

Every kernel operation is reachable from here: normal forms, commutators,
Poisson brackets, semiclassical limits, Poisson closures, ideal membership,
growth tables, confluence checks, and the full per-n verification pipeline
(`verify-paper`).

Exit codes: 0 all checks passed (or a plain answer was printed), 1 a
mathematical check failed (the report says which), 2 bad input (parse errors,
malformed files, invalid configuration).

Reports are emitted as JSON (default) or as a Markdown rendering of the same
record.  Reruns with identical configuration produce byte-identical JSON
apart from the per-check `timing` fields (milliseconds).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .errors import KernelError, NotCommutativeAtOne, ParseError
from .exprs import parse_cpoly, parse_expression, parse_scalar  # noqa: F401
from .ideals import CommIdeal, MonomialOrder, membership, poisson_closure
from .limitmap import SampleSet, verify_counterexample
from .pbw import (B, B_lambda, B_q, PBWPresentation, Usl2, check_pbw_overlaps,
                  commutator, growth_dimensions, growth_slope,
                  presentation_from_json)
from .poisson import PoissonAlgebra, poisson_bracket, semiclassical_limit

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2

SAMPLES_ENV_VAR = "SCLIM_SAMPLES"

_BUILTIN_ALGEBRAS = ("B", "B_q", "Usl2", "B_lambda:<value>")


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation parameters for the verification pipeline."""

    command: str
    n_min: int = 2
    n_max: int = 2
    samples: int = 5
    order: str = "degrevlex"
    fmt: str = "json"
    algebra: Optional[str] = None
    path: Optional[str] = None

    def __post_init__(self):
        if self.command == "verify-paper":
            if not 2 <= self.n_min <= self.n_max:
                raise ValueError("need 2 <= n-min <= n-max")
            if self.samples < 3:
                raise ValueError("need at least 3 samples")
        if self.order not in ("degrevlex", "lex"):
            raise ValueError(f"unknown order {self.order!r}")
        if self.fmt not in ("json", "markdown"):
            raise ValueError(f"unknown format {self.fmt!r}")


def _load_presentation(algebra: Optional[str], path: Optional[str]) -> PBWPresentation:
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: {exc}") from exc
        return presentation_from_json(data)
    name = algebra or "B"
    if name == "B":
        return B()
    if name == "B_q":
        return B_q()
    if name == "Usl2":
        return Usl2()
    if name.startswith("B_lambda:"):
        return B_lambda(Fraction(name.split(":", 1)[1]))
    raise ParseError(
        f"unknown algebra {name!r}; builtins: {', '.join(_BUILTIN_ALGEBRAS)}")


def _limit_algebra(algebra: Optional[str], path: Optional[str]) -> PoissonAlgebra:
    if path is None and (algebra is None or algebra == "B1"):
        return semiclassical_limit(B())
    return semiclassical_limit(_load_presentation(algebra, path))


def _split_polys(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _make_report(config: dict, checks: list[dict], passed: bool) -> dict:
    return {
        "version": __version__,
        "config": config,
        "checks": checks,
        "verdict": "pass" if passed else "fail",
    }


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    lines = [f"# sclim report (v{report['version']})", ""]
    lines.append(f"verdict: **{report['verdict']}**")
    lines.append("")
    lines.append("| check | status | details |")
    lines.append("| --- | --- | --- |")
    for check in report["checks"]:
        details = str(check.get("details", "")).replace("|", "\\|")
        lines.append(f"| {check['name']} | {check['status']} | {details} |")
    return "\n".join(lines)


def _timed_check(name: str, passed: bool, details: str, started: float) -> dict:
    return {
        "name": name,
        "status": "pass" if passed else "fail",
        "details": details,
        "timing": round((time.perf_counter() - started) * 1000, 3),
    }


# -- command handlers ------------------------------------------------------------


def _cmd_nf(args) -> int:
    presentation = _load_presentation(args.algebra, args.file)
    print(parse_expression(args.expr, presentation))
    return EXIT_OK


def _cmd_comm(args) -> int:
    presentation = _load_presentation(args.algebra, args.file)
    a = parse_expression(args.lhs, presentation)
    b = parse_expression(args.rhs, presentation)
    print(commutator(a, b))
    return EXIT_OK


def _cmd_bracket(args) -> int:
    algebra = _limit_algebra(args.algebra, args.file)
    a = parse_cpoly(args.lhs, algebra.variables)
    b = parse_cpoly(args.rhs, algebra.variables)
    print(poisson_bracket(algebra, a, b))
    return EXIT_OK


def _cmd_limit(args) -> int:
    presentation = _load_presentation(args.algebra, args.file)
    started = time.perf_counter()
    config = {"command": "limit", "algebra": presentation.name}
    try:
        algebra = semiclassical_limit(presentation)
    except NotCommutativeAtOne as exc:
        check = _timed_check("commutative_at_1", False, str(exc), started)
        print(_render(_make_report(config, [check], False), args.format))
        return EXIT_CHECK_FAILED
    check = _timed_check("commutative_at_1", True,
                         json.dumps(algebra.to_json()), started)
    print(_render(_make_report(config, [check], True), args.format))
    return EXIT_OK


def _order_from_args(args, variables) -> MonomialOrder:
    return MonomialOrder(kind=args.order, precedence=tuple(variables))


def _cmd_closure(args) -> int:
    variables = tuple(_split_polys(args.vars))
    algebra = _limit_algebra(None, None) if variables == ("e", "f", "h") else None
    if algebra is None:
        raise ParseError("closure needs the default variables e,f,h")
    gens = [parse_cpoly(text, variables) for text in _split_polys(args.ideal)]
    ideal = CommIdeal(variables, gens, _order_from_args(args, variables))
    closure = poisson_closure(ideal, algebra)
    print(json.dumps({"vars": list(variables),
                      "generators": _split_polys(args.ideal),
                      "closure_basis": closure.basis_strings()}, indent=2))
    return EXIT_OK


def _cmd_member(args) -> int:
    variables = tuple(_split_polys(args.vars))
    gens = [parse_cpoly(text, variables) for text in _split_polys(args.ideal)]
    ideal = CommIdeal(variables, gens, _order_from_args(args, variables))
    poly = parse_cpoly(args.poly, variables)
    inside, remainder = membership(poly, ideal)
    print("member" if inside else f"not a member (remainder: {remainder})")
    return EXIT_OK


def _cmd_gk(args) -> int:
    presentation = _load_presentation(args.algebra, args.file)
    dims = growth_dimensions(presentation, args.dmax)
    lo = args.window_lo if args.window_lo is not None else max(1, args.dmax // 2)
    hi = args.window_hi if args.window_hi is not None else args.dmax
    slope = growth_slope(dims, lo, hi)
    print(json.dumps({"algebra": presentation.name,
                      "dimensions": dims,
                      "window": [lo, hi],
                      "slope": str(slope),
                      "slope_float": float(slope)}, indent=2))
    return EXIT_OK


def _cmd_overlaps(args) -> int:
    presentation = _load_presentation(args.algebra, args.file)
    started = time.perf_counter()
    report = check_pbw_overlaps(presentation)
    checks = [
        _timed_check(f"overlap_{'_'.join(presentation.generators[g] for g in c.triple)}",
                     c.ok,
                     "both reductions agree" if c.ok else
                     f"left: {c.left}; right: {c.right}",
                     started)
        for c in report.checks
    ]
    config = {"command": "overlaps", "algebra": presentation.name}
    print(_render(_make_report(config, checks, report.passed), args.format))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_verify(args) -> int:
    samples_default = os.environ.get(SAMPLES_ENV_VAR)
    samples = args.samples if args.samples is not None else \
        int(samples_default) if samples_default else 5
    config = RunConfig(command="verify-paper", n_min=args.n_min, n_max=args.n_max,
                       samples=samples, fmt=args.format)
    nodes = SampleSet.integers(config.samples)
    checks = []
    all_passed = True
    for n in range(config.n_min, config.n_max + 1):
        started = time.perf_counter()
        report = verify_counterexample(n, nodes)
        all_passed = all_passed and report.passed
        for sub in report.checks:
            checks.append(_timed_check(f"n={n}:{sub.name}", sub.passed,
                                       sub.details, started))
    config_echo = {"command": "verify-paper", "n_min": config.n_min,
                   "n_max": config.n_max, "samples": config.samples,
                   "nodes": [str(x) for x in nodes]}
    print(_render(_make_report(config_echo, checks, all_passed), config.fmt))
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


# -- argument parsing --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sclim",
        description="Exact kernel for PBW deformation families and their "
                    "semiclassical limits.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra_opts(p, with_format=False):
        p.add_argument("--algebra", default=None,
                       help="builtin algebra name (B, B_q, Usl2, B_lambda:VALUE)")
        p.add_argument("--file", default=None,
                       help="path to a presentation JSON file")
        if with_format:
            p.add_argument("--format", default="json",
                           choices=("json", "markdown"))

    p = sub.add_parser("nf", help="normal form of an expression")
    add_algebra_opts(p)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_nf)

    p = sub.add_parser("comm", help="commutator of two expressions")
    add_algebra_opts(p)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(handler=_cmd_comm)

    p = sub.add_parser("bracket", help="Poisson bracket in the limit algebra")
    p.add_argument("--algebra", default="B1",
                   help="B1 (default) or a parametric algebra to take the limit of")
    p.add_argument("--file", default=None)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(handler=_cmd_bracket)

    p = sub.add_parser("limit", help="semiclassical limit of a presentation")
    add_algebra_opts(p, with_format=True)
    p.set_defaults(handler=_cmd_limit)

    p = sub.add_parser("closure", help="Poisson closure of an ideal in the limit")
    p.add_argument("--ideal", required=True,
                   help="comma-separated generator polynomials")
    p.add_argument("--vars", default="e,f,h")
    p.add_argument("--order", default="degrevlex", choices=("degrevlex", "lex"))
    p.set_defaults(handler=_cmd_closure)

    p = sub.add_parser("member", help="ideal membership test")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", default="e,f,h")
    p.add_argument("--order", default="degrevlex", choices=("degrevlex", "lex"))
    p.set_defaults(handler=_cmd_member)

    p = sub.add_parser("gk", help="growth dimension table and log-log slope")
    add_algebra_opts(p)
    p.add_argument("--dmax", type=int, default=12)
    p.add_argument("--window-lo", type=int, default=None)
    p.add_argument("--window-hi", type=int, default=None)
    p.set_defaults(handler=_cmd_gk)

    p = sub.add_parser("overlaps", help="diamond-lemma confluence check")
    add_algebra_opts(p, with_format=True)
    p.set_defaults(handler=_cmd_overlaps)

    p = sub.add_parser("verify-paper",
                       help="run the full verification pipeline per n")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--samples", type=int, default=None,
                   help=f"sample node count (default 5, or ${SAMPLES_ENV_VAR})")
    p.add_argument("--format", default="json", choices=("json", "markdown"))
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else EXIT_INPUT
    try:
        return args.handler(args)
    except (KernelError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
