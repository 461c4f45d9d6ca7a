"""Command line entry point: ``signedbalance {analyze,solve,census,correlate}``.

Exit status is 0 on success, 2 for bad arguments, configs or inputs, and 3
when ``--require-proven`` is given and some optimum could not be proven.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .errors import BalanceError
from .frustration import SolveOptions, normalized_F, solve_exact
from .ingest import apply_sign_rule, parse_gml, parse_sign_rule, read_edge_csv, symmetrize
from .graph import build_graph
from .micro import TRANSITIVE_TYPES, CensusType, micro_stats
from .report import (
    analyze_results,
    export_partition,
    load_config,
    pearson,
    write_outputs,
)
from .rounding import fmt3, round_half_up

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_UNPROVEN = 3


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--time-budget", type=float, help="wall-clock seconds per solve (default 300)")
    p.add_argument("--node-budget", type=int, help="branch-and-bound nodes per solve (default 5e7)")
    p.add_argument("--enumerate-optima", action="store_true", help="list every optimal partition")
    p.add_argument("--seed", type=int, help="local-search seed (default 0)")
    p.add_argument("--require-proven", action="store_true", help="exit 3 if any optimum is unproven")


def _input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="edge list (CSV with source,target,weight header) or GML file")
    p.add_argument("--format", choices=("csv", "gml"), help="input format (default: from the file suffix)")
    p.add_argument("--sign-rule", default="sign_only", help="sign_only | threshold:K | rank:TOP:BOTTOM:MAX")
    p.add_argument("--symmetrize", action="store_true", help="add the reverse of every edge")


def _solver_overrides(args) -> dict:
    out = {}
    if args.time_budget is not None:
        out["time_budget"] = args.time_budget
    if args.node_budget is not None:
        out["node_budget"] = args.node_budget
    if args.enumerate_optima:
        out["enumerate_all"] = True
    if args.seed is not None:
        out["seed"] = args.seed
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signedbalance", description="Structural balance of signed digraphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="measure every network of a JSON config")
    p.add_argument("config", help="JSON dataset config")
    p.add_argument("--out", help="output directory (overrides the config)")
    p.add_argument("--workers", type=int, help="parallel networks (capped by BALANCE_THREADS)")
    _solver_flags(p)

    p = sub.add_parser("solve", help="frustration index and an optimal partition of one network")
    _input_flags(p)
    p.add_argument("--out", help="write the partition as a one-column CSV here")
    _solver_flags(p)

    p = sub.add_parser("census", help="transitive triad counts and T(G) of one network")
    _input_flags(p)

    p = sub.add_parser("correlate", help="Pearson r between two columns of a measurements CSV")
    p.add_argument("table", help="CSV with a header row, e.g. network-measurements.csv")
    p.add_argument("--x", required=True, help="first column name")
    p.add_argument("--y", required=True, help="second column name")
    return parser


def _load_graph(args):
    fmt = args.format or ("gml" if args.input.lower().endswith(".gml") else "csv")
    if fmt == "gml":
        g = parse_gml(Path(args.input).read_text(encoding="utf-8"))
    else:
        records = read_edge_csv(args.input)
        nodes = {r.source for r in records} | {r.target for r in records}
        g = build_graph(apply_sign_rule(records, parse_sign_rule(args.sign_rule)), nodes=nodes)
    return symmetrize(g) if args.symmetrize else g


def _cmd_analyze(args) -> int:
    cfgs = load_config(args.config)
    overrides = _solver_overrides(args)
    for cfg in cfgs:
        cfg.solver = {**cfg.solver, **overrides}
        if args.out:
            cfg.out = None
    results = analyze_results(cfgs, args.workers)
    if args.out:
        write_outputs(results, args.out)
    for r in results:
        row = r.row
        L = str(row.L) if row.proven else f"{row.lower}..{row.upper}"
        print(f"{row.network_label}: n={row.n} m={row.m} T={fmt3(round_half_up(row.T))} L={L} "
              f"F={fmt3(row.F)} C={fmt3(round_half_up(row.C))} D={fmt3(round_half_up(row.D))}")
    if args.require_proven and not all(r.row.proven for r in results):
        return EXIT_UNPROVEN
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _load_graph(args)
    opts = SolveOptions(**_solver_overrides(args))
    res = solve_exact(g, opts)
    F = fmt3(normalized_F(res.L, g.m)) if g.m else ""
    print(f"L={res.L} F={F} proven={str(res.proven).lower()} lower={res.lower} upper={res.upper}")
    print("X=" + " ".join(sorted(res.partition.members(1), key=g.nodes.index)))
    if res.all_optima is not None:
        more = " (truncated)" if res.all_optima.truncated else ""
        print(f"optima={len(res.all_optima)}{more}")
        for p in res.all_optima:
            print("  X=" + " ".join(sorted(p.members(1), key=g.nodes.index)))
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            export_partition(g, res, fh, label=Path(args.input).stem)
    if args.require_proven and not res.proven:
        return EXIT_UNPROVEN
    return EXIT_OK


def _cmd_census(args) -> int:
    g = _load_graph(args)
    rep = micro_stats(g)
    print(f"n={g.n} m={g.m} m_plus={g.m_plus} m_minus={g.m_minus}")
    print(f"balanced={rep.balanced_count} unbalanced={rep.unbalanced_count} T={fmt3(round_half_up(rep.T))}")
    print(json.dumps({str(t): rep.census[t] for t in CensusType}))
    for t in TRANSITIVE_TYPES:
        share = rep.balanced_fraction_by_type[t]
        print(f"{t}: balanced={rep.balanced_by_type[t]} unbalanced={rep.unbalanced_by_type[t]} "
              f"share={fmt3(round_half_up(share))}")
    return EXIT_OK


def _cmd_correlate(args) -> int:
    with open(args.table, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    for col in (args.x, args.y):
        if not rows or col not in rows[0]:
            raise BalanceError(f"column {col!r} not in {args.table}")
    pairs = [(r[args.x], r[args.y]) for r in rows if r[args.x] and r[args.y] and ".." not in r[args.x] + r[args.y]]
    r = pearson([float(a) for a, _ in pairs], [float(b) for _, b in pairs])
    print(f"r={r:.3f} n={len(pairs)}")
    return EXIT_OK


COMMANDS = {"analyze": _cmd_analyze, "solve": _cmd_solve, "census": _cmd_census, "correlate": _cmd_correlate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (BalanceError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
