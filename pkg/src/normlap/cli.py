"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 an inequality was violated.
"""
from __future__ import annotations

import argparse
import json
import sys

from .campaign import CampaignConfig, ConfigError, parse_sizes, run_campaign
from .graph import FAMILIES, GraphError, gen_family, gen_random_connected, read_edge_list
from .randic import randic_minus_one
from .report import DEFAULT_TOL, evaluate, fmt
from .spectral import SpectralError, graph_spectrum, moment_check

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="normlap", description="Normalized Laplacian spectra, R_-1 and eigenvalue bounds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("spectrum", help="spectrum, R_-1 and trace identities of an edge-list graph")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("json", "text"), default="text")

    bp = sub.add_parser("bounds", help="evaluate and check every bound for one graph")
    bp.add_argument("file")
    bp.add_argument("--format", choices=("json", "csv", "text"), default="text")
    bp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)

    gp = sub.add_parser("gen", help="write a generated graph as an edge list")
    gp.add_argument("family", choices=FAMILIES + ("random",))
    gp.add_argument("params", nargs="+",
                    help="n for most families; a b for complete_bipartite; n p for random")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("-o", "--output")

    vp = sub.add_parser("verify", help="run a verification campaign")
    mode = vp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", metavar="N", help="all labeled connected graphs, e.g. 6 or 3-6")
    mode.add_argument("--random", metavar="N", help="random connected graphs, e.g. 20 or 10,20,30")
    mode.add_argument("--config", metavar="FILE", help="JSON campaign config")
    vp.add_argument("--trials", type=int, default=100)
    vp.add_argument("--p", type=float, default=0.5, dest="edge_prob")
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    vp.add_argument("--workers", type=int, default=1)
    vp.add_argument("-o", "--output", help="CSV output path")
    return p


def _load_connected(path):
    g = read_edge_list(path)
    if not g.connected:
        raise GraphError(f"{path}: graph is not connected")
    return g


def cmd_spectrum(args) -> int:
    g = _load_connected(args.file)
    spec = graph_spectrum(g)
    r = randic_minus_one(g)
    res = moment_check(spec, r)
    if args.format == "json":
        print(json.dumps({
            "graph": {"n": g.n, "m": g.m, "degrees": sorted(g.degrees, reverse=True), "source": args.file},
            "spectrum": list(spec.values),
            "randic": r,
            "identities": {"sum_residual": res[0], "square_sum_residual": res[1]},
        }, indent=2))
    else:
        print(f"n={g.n} m={g.m}")
        print("spectrum: " + " ".join(fmt(x) for x in spec.values))
        print(f"R_-1: {fmt(r)}")
        print(f"identity residuals: sum={res[0]:.3e} squares={res[1]:.3e}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = _load_connected(args.file)
    rep = evaluate(g, source=args.file, tol=args.tol)
    out = {"json": rep.to_json, "csv": rep.to_csv, "text": rep.to_text}[args.format]()
    sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return EXIT_OK if rep.all_pass else EXIT_VIOLATION


def cmd_gen(args) -> int:
    try:
        if args.family == "random":
            if len(args.params) != 2:
                raise GraphError("random takes n and p")
            g = gen_random_connected(int(args.params[0]), float(args.params[1]), args.seed)
        else:
            g = gen_family(args.family, *(int(x) for x in args.params))
    except ValueError as exc:
        raise GraphError(str(exc)) from None
    text = g.to_edge_list()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.config:
        cfg = CampaignConfig.from_file(args.config)
        if args.output and not cfg.output:
            cfg.output = args.output
    else:
        exhaustive = args.exhaustive is not None
        cfg = CampaignConfig(
            mode="exhaustive" if exhaustive else "random",
            sizes=parse_sizes(args.exhaustive if exhaustive else args.random),
            trials=args.trials,
            edge_prob=args.edge_prob,
            seed=args.seed,
            tolerance=args.tol,
            output=args.output,
            workers=args.workers,
        )
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            summary = run_campaign(cfg, fh)
    else:
        summary = run_campaign(cfg)
    print(summary.format(cfg.tolerance))
    return EXIT_OK if summary.violations == 0 else EXIT_VIOLATION


COMMANDS = {"spectrum": cmd_spectrum, "bounds": cmd_bounds, "gen": cmd_gen, "verify": cmd_verify}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (OSError, GraphError, SpectralError, ConfigError, ValueError) as exc:
        print(f"normlap {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
