"""Command-line interface.

Usage:
    qlmass gen schwarzschild --mass 1 --r 2 -o schw.json
    qlmass validate schw.json
    qlmass mass --functional critical schw.json
    qlmass lambda0 schw.json
    qlmass star --left hawking --right brown-york schw.json
    qlmass curve --mass 1 --r 2 --steps 100
    qlmass verify --suite all

JSON goes to stdout and diagnostics to stderr. Exit status is 0 on success,
1 for invalid input and 2 for numerical failures or usage errors. The
default sample count for ``gen`` comes from ``QLMASS_N`` (fallback 1024).
"""

from __future__ import annotations

import argparse
import io as _stringio
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from . import algebra, critical, errors, generators, masses, metric_tools, schwarzschild
from .embedding import embed_revolution
from .io import dumps, read_data, write_csv, write_data
from .surface import validate

__all__ = ["CommandResult", "build_parser", "run", "main"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2


@dataclass
class CommandResult:
    status: int
    payload: str = ""
    diagnostics: List[str] = field(default_factory=list)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors instead of exiting."""

    def error(self, message):
        raise _UsageError("%s\n%s: error: %s" % (self.format_usage().rstrip(), self.prog, message))


def _json(obj) -> str:
    return dumps(obj, indent=1) + "\n"


# -- commands ----------------------------------------------------------------

def _cmd_gen(args) -> CommandResult:
    n = args.n if args.n is not None else generators.default_n()
    kind = args.kind
    if kind == "round":
        spec = generators.GeneratorSpec("round", {"radius": args.radius, "H": args.H}, n)
    elif kind == "schwarzschild":
        spec = generators.GeneratorSpec("schwarzschild", {"m": args.mass, "r": args.r}, n)
    elif kind == "ellipsoid":
        spec = generators.GeneratorSpec("ellipsoid", {"a": args.a, "c": args.c}, n)
    else:
        spec = generators.GeneratorSpec(
            "perturbed_round",
            {"radius": args.radius, "H": args.H, "amp": args.amp, "mode": args.mode}, n)
    data = generators.generate(spec)
    buf = _stringio.StringIO()
    write_data(data, buf)
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(buf.getvalue())
        return CommandResult(EXIT_OK, "", ["wrote %s (%d samples)" % (args.output, n)])
    return CommandResult(EXIT_OK, buf.getvalue())


def _cmd_validate(args) -> CommandResult:
    data = read_data(args.data)
    report = validate(data)
    doc = {"label": data.label, "n": data.profile.n}
    doc.update(report.as_dict())
    status = EXIT_OK if report.ok else EXIT_INVALID
    return CommandResult(status, _json(doc), list(report.diagnostics))


def _cmd_mass(args) -> CommandResult:
    data = read_data(args.data)
    evaluators = {
        "hawking": masses.hawking,
        "brown-york": masses.brown_york,
        "miao": masses.miao,
        "critical": masses.critical_mass,
    }
    value = evaluators[args.functional](data)
    return CommandResult(EXIT_OK, _json(value.as_dict()))


def _cmd_lambda0(args) -> CommandResult:
    data = read_data(args.data)
    return CommandResult(EXIT_OK, _json(critical.bracket(data).as_dict()))


def _cmd_star(args) -> CommandResult:
    data = read_data(args.data)
    left = algebra.get_functional(args.left)
    right = algebra.get_functional(args.right)
    doc = {
        "left": left.name,
        "right": right.name,
        "left_lambda": algebra.lambda_of(left, data),
        "right_lambda": algebra.lambda_of(right, data),
        "value": algebra.star(left, right)(data),
    }
    lo1, hi1 = algebra.lambda_interval(left, data)
    lo2, hi2 = algebra.lambda_interval(right, data)
    if lo1 < hi1 or lo2 < hi2:
        # a threshold is only bracketed: report intervals alongside the point values
        doc["left_lambda_bracket"] = [lo1, hi1]
        doc["right_lambda_bracket"] = [lo2, hi2]
        doc["value_bracket"] = list(algebra.star_bounds(left, right, data))
    return CommandResult(EXIT_OK, _json(doc))


def _cmd_curve(args) -> CommandResult:
    if args.steps < 1:
        raise errors.InvalidSpec("--steps must be at least 1")
    lam_r = schwarzschild.lambda_exact(args.mass, args.r)
    lam = lam_r * np.arange(1, args.steps + 1) / args.steps
    lam[-1] = lam_r
    m_lam = schwarzschild.inner_mass_curve(args.mass, args.r, lam)
    m_lam = np.atleast_1d(m_lam)
    if args.format == "json":
        return CommandResult(EXIT_OK, _json({"lambda_r": lam_r, "lambda": lam, "m_lambda": m_lam}))
    buf = _stringio.StringIO()
    write_csv([("lambda", "m_lambda")] + [(float(a), float(b)) for a, b in zip(lam, m_lam)], buf)
    return CommandResult(EXIT_OK, buf.getvalue())


def _cmd_embed(args) -> CommandResult:
    data = read_data(args.data)
    emb = embed_revolution(data)
    if args.format == "json":
        return CommandResult(EXIT_OK, _json({"t": emb.t_grid, "rho": emb.rho, "z": emb.z,
                                             "H0": emb.H0, "metric_residual": emb.metric_residual}))
    buf = _stringio.StringIO()
    write_csv(emb.csv_rows(), buf)
    return CommandResult(EXIT_OK, buf.getvalue())


def _cmd_verify(args) -> CommandResult:
    n = args.n if args.n is not None else generators.default_n()
    return CommandResult(EXIT_OK, _json(metric_tools.verification_report(args.suite, n)))


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlmass", description="Quasi-local masses of rotationally symmetric Bartnik data.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    gen = sub.add_parser("gen", help="generate canonical Bartnik data as JSON")
    kinds = gen.add_subparsers(dest="kind", metavar="KIND", parser_class=_Parser)
    kinds.required = True

    def with_common(p):
        p.add_argument("-n", type=int, default=None, help="samples (default: $QLMASS_N or 1024)")
        p.add_argument("-o", "--output", default=None, help="output path (default: stdout)")
        return p

    p = with_common(kinds.add_parser("round", help="round sphere with constant H"))
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--H", type=float, default=2.0)
    p = with_common(kinds.add_parser("schwarzschild", help="isotropic coordinate sphere"))
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p = with_common(kinds.add_parser("ellipsoid", help="spheroid with its Euclidean mean curvature"))
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--c", type=float, default=2.0)
    p = with_common(kinds.add_parser("perturbed", help="round sphere with a Legendre-mode bump"))
    p.add_argument("--radius", type=float, default=1.0)
    p.add_argument("--H", type=float, default=2.0)
    p.add_argument("--amp", type=float, default=0.05)
    p.add_argument("--mode", type=int, default=2)
    gen.set_defaults(func=_cmd_gen)

    p = sub.add_parser("validate", help="geometry report and invariant check")
    p.add_argument("data", help="Bartnik data JSON ('-' for stdin)")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("mass", help="evaluate a mass functional")
    p.add_argument("--functional", required=True, choices=sorted(algebra.FUNCTIONALS))
    p.add_argument("data")
    p.set_defaults(func=_cmd_mass)

    p = sub.add_parser("lambda0", help="bracket the critical parameter")
    p.add_argument("data")
    p.set_defaults(func=_cmd_lambda0)

    p = sub.add_parser("star", help="evaluate the product left * right")
    p.add_argument("--left", required=True, choices=sorted(algebra.FUNCTIONALS))
    p.add_argument("--right", required=True, choices=sorted(algebra.FUNCTIONALS))
    p.add_argument("data")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser("curve", help="Schwarzschild inner-mass curve m(lambda) on (0, lambda_r]")
    p.add_argument("--mass", type=float, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("embed", help="profile curve (t, rho, z, H0) of the Euclidean embedding")
    p.add_argument("data")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("verify", help="run the curvature-identity suites")
    p.add_argument("--suite", choices=("foliation", "conformal", "collar", "all"), default="all")
    p.add_argument("-n", type=int, default=None, help="finest grid size (default: $QLMASS_N or 1024)")
    p.set_defaults(func=_cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except _UsageError as exc:
        return CommandResult(EXIT_NUMERICAL, "", [str(exc)])
    try:
        return args.func(args)
    except errors.ValidationError as exc:
        return CommandResult(EXIT_INVALID, "", ["error: %s" % exc])
    except errors.NumericalError as exc:
        return CommandResult(EXIT_NUMERICAL, "", ["numerical failure: %s" % exc])


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.payload:
        sys.stdout.write(result.payload)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
