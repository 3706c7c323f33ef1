"""Command-line interface: ``iwasawa-tower {series,invariants,tower,graph,check}``.

Exit status: 0 success or pass, 1 verdict fail, 2 usage/parse/semantic
error, 3 a level exceeds the vertex cap.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cayley import build_cayley_serre, write_edge_list
from .chebyshev import series_Q
from .config import FORMATS, RunConfig, make_spec, parse_config
from .errors import LevelTooLarge, ParseError, SemanticError, TowerError
from .invariants import extract_mu_lambda, fast_path
from .padic import render_digits
from .tower import (FAIL, evaluate_verdict, parse_machine, render_machine, render_table,
                    run_tower)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_SETTINGS = ("terms", "precision", "levels", "cap", "jobs", "format", "level", "digits")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("tower specification")
    src.add_argument("--prime", type=int, help="the prime l")
    src.add_argument("--seeds", nargs="+", metavar="SEED",
                     help='seeds such as 1/3 3/5 or "sqrt(3)@4" (commas also separate)')
    src.add_argument("--config", metavar="PATH", help="key = value configuration file")
    opts = common.add_argument_group("parameters")
    opts.add_argument("--terms", type=int, metavar="K", help="series terms (default 12)")
    opts.add_argument("--precision", type=int, metavar="N", help="l-adic digits (default 24)")
    opts.add_argument("--levels", type=int, metavar="N_MAX", help="deepest tower level")
    opts.add_argument("--cap", type=int, help="vertex cap per level (default 1024)")
    opts.add_argument("--jobs", type=int, help="levels computed in parallel")
    opts.add_argument("--digits", type=int, help="digits shown per coefficient (default 4)")
    opts.add_argument("--format", choices=FORMATS)
    opts.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="iwasawa-tower",
        description="Iwasawa invariants of abelian l-towers of bouquets.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("series", parents=[common], help="print the coefficients of Q(T)")
    sub.add_parser("invariants", parents=[common], help="print mu, lambda and the n0 bound")
    sub.add_parser("tower", parents=[common], help="verify the growth law level by level")
    g = sub.add_parser("graph", parents=[common], help="export the level-n edge list")
    g.add_argument("--level", type=int, default=None, help="tower level n (default 1)")
    c = sub.add_parser("check", help="re-verify a machine-format tower report")
    c.add_argument("report", help="path of a report written with --format machine")
    return parser


def resolve(args) -> tuple:
    """Merge config file and flags; flags win for numeric parameters."""
    config = RunConfig(subcommand=args.subcommand, config_path=args.config)
    inline = args.prime is not None or args.seeds is not None
    if args.config and inline:
        raise SemanticError("give either --config or --prime/--seeds, not both")
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            spec, config = parse_config(fh.read(), config)
    else:
        if args.prime is None or not args.seeds:
            raise SemanticError("--prime and --seeds are required without --config")
        seeds = [s for chunk in args.seeds for s in chunk.split(",") if s.strip()]
        spec = make_spec(args.prime, seeds)
    for key in _SETTINGS:
        value = getattr(args, key, None)
        if value is not None:
            setattr(config, key, value)
    config.out = args.out
    return spec, config.validate()


def cmd_series(spec, config) -> tuple[str, int]:
    Q = series_Q(spec, config.terms, config.precision)
    shown = [render_digits(c, min(config.digits, c.precision)) for c in Q.coefficients]
    if config.format == "machine":
        doc = {"prime": spec.prime, "seeds": [str(s) for s in spec.seeds],
               "precision": config.precision,
               "coefficients": [{"k": k, "residue": str(c.residue), "digits": d}
                                for k, (c, d) in enumerate(zip(Q.coefficients, shown), 1)]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", EXIT_OK
    return "".join(f"c{k} = {d}…\n" for k, d in enumerate(shown, 1)), EXIT_OK


def cmd_invariants(spec, config) -> tuple[str, int]:
    inv = extract_mu_lambda(series_Q(spec, config.terms, config.precision))
    fast = fast_path(spec) is not None
    if config.format == "machine":
        doc = {"mu": inv.mu, "lambda": inv.lam, "k0": inv.k0, "n0_bound": inv.n0_bound,
               "provisional": inv.provisional, "fast_path": fast}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n", EXIT_OK
    lines = [f"mu = {inv.mu}", f"lambda = {inv.lam}", f"k0 = {inv.k0}",
             f"n0 bound = {inv.n0_bound}",
             f"provisional = {'yes' if inv.provisional else 'no'}",
             f"fast path = {'yes' if fast else 'no'}"]
    if inv.reason:
        lines.append(f"note: {inv.reason}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_tower(spec, config) -> tuple[str, int]:
    report = run_tower(spec, config.levels, config.terms, config.precision,
                       config.cap, config.jobs, config.digits)
    text = render_machine(report) if config.format == "machine" else render_table(report)
    return text, EXIT_FAIL if report.verdict == FAIL else EXIT_OK


def cmd_graph(spec, config) -> tuple[str, int]:
    n = config.level
    if spec.prime ** n > config.cap:
        raise LevelTooLarge(f"level {n} has {spec.prime ** n} vertices, above the cap of {config.cap}")
    return write_edge_list(build_cayley_serre(spec, n)), EXIT_OK


def cmd_check(path) -> tuple[str, int]:
    with open(path, encoding="utf-8") as fh:
        try:
            report = parse_machine(fh.read())
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"{path}: {exc}") from None
    verdict = evaluate_verdict(report)
    out = f"recorded verdict: {report.verdict}\nrecomputed verdict: {verdict}\n"
    return out, EXIT_FAIL if verdict == FAIL else EXIT_OK


COMMANDS = {"series": cmd_series, "invariants": cmd_invariants,
            "tower": cmd_tower, "graph": cmd_graph}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.subcommand == "check":
            text, status = cmd_check(args.report)
            out = None
        else:
            spec, config = resolve(args)
            text, status = COMMANDS[args.subcommand](spec, config)
            out = config.out
    except LevelTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (TowerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
