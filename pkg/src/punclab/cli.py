"""Command-line interface.

Subcommands: field, rs construct|full, puncture, check, badtuples
count|sampleZ|chain, bounds main|window|johnson, mc run|sweep, bench.
Exit codes: 0 success, 2 precondition violation, 3 budget exhausted,
4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import badtuples, bounds, codes, harness, listdec, rs
from .errors import (
    BudgetExceeded,
    IoError,
    PunclabError,
    RetriesExhausted,
    SchemaVersionMismatch,
)
from .gf import field_create, parse_field_spec

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_BUDGET = 3
EXIT_IO = 4


def _fraction(text: str) -> Fraction:
    return Fraction(text)  # accepts "2/3" and exact decimal strings like "0.3"


def _emit(data, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_code(path: str) -> codes.Code:
    return codes.code_from_text(Path(path).read_text())


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_field(args) -> int:
    p, e = parse_field_spec(args.spec)
    ctx = field_create(p, e)
    _emit({"p": ctx.p, "e": ctx.e, "q": ctx.q,
           "modulus_low_first": list(ctx.modulus)}, args.out)
    return EXIT_OK


def cmd_rs_construct(args) -> int:
    p, e = parse_field_spec(args.field)
    ctx = field_create(p, e)
    evals = [int(tok) for tok in args.evals.split(",")]
    code = rs.rs_create(ctx, args.k, evals)
    _write(codes.code_to_text(rs.rs_materialize(code)), args.out)
    return EXIT_OK


def cmd_rs_full(args) -> int:
    p, e = parse_field_spec(args.field)
    ctx = field_create(p, e)
    code = rs.rs_full(ctx, args.k)
    _write(codes.code_to_text(rs.rs_materialize(code)), args.out)
    return EXIT_OK


def cmd_puncture(args) -> int:
    code = _load_code(args.code)
    if args.plan:
        plan = codes.plan_from_text(Path(args.plan).read_text())
    else:
        if args.n is None:
            raise PunclabError("give either --plan or --n (with --seed)")
        plan = codes.sample_puncturing(code.m, args.n, args.seed)
    sub = codes.puncture(code, plan)
    if args.plan_out:
        Path(args.plan_out).write_text(codes.plan_to_text(plan))
    _write(codes.code_to_text(sub), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    code = _load_code(args.code)
    params = listdec.ListDecParams(r=_fraction(args.r), L=args.L, n=code.m)
    start = time.perf_counter()
    if args.mode == "exhaustive":
        decision = listdec.decide_exhaustive(code, params,
                                             node_budget=args.budget_nodes)
    else:
        decision = listdec.decide_witness_search(
            code, params, subset_budget=args.budget_subsets)
    elapsed = time.perf_counter() - start
    payload = {
        "verdict": decision.verdict,
        "stats": {"nodes": decision.stats.nodes,
                  "subsets": decision.stats.subsets, "time": elapsed},
    }
    if decision.witness is not None:
        payload["witness"] = {
            "center": list(decision.witness.center),
            "members": [list(w) for w in decision.witness.members],
            "agreements": list(decision.witness.agreements()),
        }
    _emit(payload, args.out)
    return EXIT_OK


def cmd_badtuples_count(args) -> int:
    code = _load_code(args.code)
    sets_data = json.loads(Path(args.sets).read_text())
    sys_ = badtuples.system_from_json(sets_data, c=args.c, h=args.h)
    count = badtuples.count_bad_tuples(sys_, code, budget=args.budget)
    total = 1
    for i in range(sys_.n):
        total *= code.m - i
    _emit({"bad_tuples": count, "total_tuples": total,
           "weight_condition": badtuples.weight_condition(sys_)}, args.out)
    return EXIT_OK


def cmd_badtuples_samplez(args) -> int:
    sets_data = json.loads(Path(args.sets).read_text())
    sys_ = badtuples.system_from_json(sets_data, c=args.c, h=args.h)
    M = badtuples.compute_M(sys_)
    Z = badtuples.sample_Z(sys_, M, seed=args.seed, max_retries=args.max_retries)
    _emit({"M": sorted(M), "Z": sorted(Z),
           "verified": badtuples.verify_Z(sys_, M, Z)}, args.out)
    return EXIT_OK


def cmd_badtuples_chain(args) -> int:
    report = badtuples.counting_chain_check(
        m=args.m, q=args.q, h=args.h, c=args.c,
        size_m=args.size_m, size_z=args.size_z, n=args.n)
    _emit(report._asdict(), args.out)
    return EXIT_OK


def cmd_bounds_main(args) -> int:
    params = bounds.main_params(args.c, _fraction(args.eps), args.n, args.q)
    _emit(bounds.main_report(params), args.out)
    return EXIT_OK


def cmd_bounds_window(args) -> int:
    report = bounds.check_window_1_3(args.c, args.q, args.h, m=args.m, n=args.n)
    _emit(report.to_json(), args.out)
    return EXIT_OK


def cmd_bounds_johnson(args) -> int:
    profile = bounds.johnson_profile(_fraction(args.eps), args.n, args.q)
    _emit({"rate_threshold": str(profile.rate_threshold),
           "radius": str(profile.radius),
           "list_size": profile.list_size}, args.out)
    return EXIT_OK


def cmd_mc_run(args) -> int:
    config = harness.ExperimentConfig(
        field_spec=args.field, k=args.k, n=args.n, r=_fraction(args.r),
        L=args.L, trials=args.trials, seed=args.seed, mode=args.mode,
        budget_nodes=args.budget_nodes, budget_subsets=args.budget_subsets)
    run = harness.run_mc(config, workers=args.workers)
    if args.out:
        harness.persist_run(run, args.out)
    summary = run.aggregates()
    summary["config_hash"] = config.config_hash()
    _emit(summary, None)
    return EXIT_OK


def cmd_mc_sweep(args) -> int:
    spec = json.loads(Path(args.config).read_text())
    configs = [harness.ExperimentConfig.from_json(entry) for entry in spec]
    rows = harness.sweep(configs, workers=args.workers)
    if args.out_csv:
        Path(args.out_csv).write_text(harness.sweep_to_csv(rows))
    _emit([row.to_json() for row in rows], args.out)
    return EXIT_OK


def cmd_bench(args) -> int:
    from . import bench

    rows = bench.run_benchmarks(repeat=args.repeat)
    sys.stdout.write(bench.format_table(rows) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="punclab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("field", help="describe a field given as p or p^e")
    p.add_argument("spec")
    add_out(p)
    p.set_defaults(func=cmd_field)

    p_rs = sub.add_parser("rs", help="construct Reed-Solomon codes")
    rs_sub = p_rs.add_subparsers(dest="rs_command", required=True)
    p = rs_sub.add_parser("construct")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--evals", required=True,
                   help="comma-separated element indices")
    add_out(p)
    p.set_defaults(func=cmd_rs_construct)
    p = rs_sub.add_parser("full")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    add_out(p)
    p.set_defaults(func=cmd_rs_full)

    p = sub.add_parser("puncture", help="restrict a code to chosen positions")
    p.add_argument("--code", required=True)
    p.add_argument("--plan", default=None, help="plan file")
    p.add_argument("--n", type=int, default=None, help="sample a plan of this length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plan-out", default=None, help="write the sampled plan here")
    add_out(p)
    p.set_defaults(func=cmd_puncture)

    p = sub.add_parser("check", help="decide (r, L)-list-decodability")
    p.add_argument("--code", required=True)
    p.add_argument("--r", required=True, help="radius, e.g. 2/3 or 0.5")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "witness"],
                   default="exhaustive")
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-subsets", type=int,
                   default=listdec.DEFAULT_SUBSET_BUDGET)
    add_out(p)
    p.set_defaults(func=cmd_check)

    p_bt = sub.add_parser("badtuples", help="bad-tuple machinery")
    bt_sub = p_bt.add_subparsers(dest="bt_command", required=True)
    p = bt_sub.add_parser("count")
    p.add_argument("--code", required=True)
    p.add_argument("--sets", required=True, help='JSON {"n":..,"L":..,"I":[[..],..]}')
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--budget", type=int, default=badtuples.DEFAULT_COUNT_BUDGET)
    add_out(p)
    p.set_defaults(func=cmd_badtuples_count)
    p = bt_sub.add_parser("sampleZ")
    p.add_argument("--sets", required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-retries", type=int, default=badtuples.DEFAULT_RETRY_CAP)
    add_out(p)
    p.set_defaults(func=cmd_badtuples_samplez)
    p = bt_sub.add_parser("chain")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--size-m", dest="size_m", type=int, required=True)
    p.add_argument("--size-z", dest="size_z", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_out(p)
    p.set_defaults(func=cmd_badtuples_chain)

    p_b = sub.add_parser("bounds", help="parameter validators")
    b_sub = p_b.add_subparsers(dest="bounds_command", required=True)
    p = b_sub.add_parser("main")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    add_out(p)
    p.set_defaults(func=cmd_bounds_main)
    p = b_sub.add_parser("window")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    add_out(p)
    p.set_defaults(func=cmd_bounds_window)
    p = b_sub.add_parser("johnson")
    p.add_argument("--eps", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    add_out(p)
    p.set_defaults(func=cmd_bounds_johnson)

    p_mc = sub.add_parser("mc", help="Monte-Carlo experiments")
    mc_sub = p_mc.add_subparsers(dest="mc_command", required=True)
    p = mc_sub.add_parser("run")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["exhaustive", "witness"],
                   default="exhaustive")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-subsets", type=int,
                   default=listdec.DEFAULT_SUBSET_BUDGET)
    p.add_argument("--out", default=None, help="persist full records here")
    p.set_defaults(func=cmd_mc_run)
    p = mc_sub.add_parser("sweep")
    p.add_argument("--config", required=True, help="JSON list of run configs")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-csv", default=None)
    add_out(p)
    p.set_defaults(func=cmd_mc_sweep)

    p = sub.add_parser("bench", help="compare compiled vs pure kernels")
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=cmd_bench)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, RetriesExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (IoError, SchemaVersionMismatch, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (PunclabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
