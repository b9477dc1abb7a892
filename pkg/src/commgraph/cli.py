"""Command-line front end: gen / verify / simulate / sweep.

Every command is a pure function of its flags plus the seed; outputs are
byte-reproducible.  Exit codes: 0 success, 1 verification failure,
2 configuration or parameter error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from .embeddings import instance_from_json, instance_to_json
from .embeddings.base import (
    ENV_MAX_EDGES,
    ENV_MAX_VERTICES,
    MaterializationCapExceeded,
    ParameterError,
)
from .experiments import (
    SWEEP_CSV_HEADER,
    distinguisher_by_name,
    minimal_budget,
    run_distinguisher_trials,
)
from .graph import dump_edge_list
from .presets import (
    clique_hiding_family,
    connectivity_family,
    degree_only_family,
    moments_block_family,
    moments_hiding_family,
    r_clique_family,
    triangle_family,
)
from .promises import gen_promise_instance
from .protocols import TRANSCRIPT_CSV_HEADER
from .rng import derive_seed

KINDS = (
    "clique-hiding",
    "triangle",
    "r-clique",
    "connectivity",
    "degree-only",
    "moments-hiding",
    "moments-block",
)

PARAM_SCHEMA = """\
per-kind parameters:
  clique-hiding    --l --blocks [--base-n --base-m --augment-connect --promise]
  triangle         --l --k [--n --s-size]
  r-clique         --r --l --k [--n --s-clique-budget]
  connectivity     --k --l [--n]
  degree-only      --n --k [--promise]
  moments-hiding   --s --alpha --c --m-tilde --blocks [--promise]
  moments-block    --s --alpha --c --m-tilde --n-side [--promise]

promise defaults to unique-intersection for the disjointness-based kinds;
triangle / r-clique / connectivity use the {0, k} promise implied by --k.
Materialization caps come from %s / %s.
""" % (ENV_MAX_VERTICES, ENV_MAX_EDGES)


class ConfigError(Exception):
    pass


def _require(args, names: list[str], kind: str):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigError(f"kind {kind} requires {' '.join(missing)}")


def family_from_args(args):
    kind = args.kind
    if kind == "clique-hiding":
        _require(args, ["l", "blocks"], kind)
        return clique_hiding_family(
            blocks=args.blocks,
            l=args.l,
            base_n=args.base_n,
            base_m=args.base_m,
            augment_connect=args.augment_connect,
            promise=args.promise,
        )
    if kind == "triangle":
        _require(args, ["l", "k"], kind)
        return triangle_family(l=args.l, k=args.k, n=args.n, s_size=args.s_size)
    if kind == "r-clique":
        _require(args, ["r", "l", "k"], kind)
        return r_clique_family(
            r=args.r, l=args.l, k=args.k, n=args.n, s_clique_budget=args.s_clique_budget
        )
    if kind == "connectivity":
        _require(args, ["k", "l"], kind)
        return connectivity_family(k=args.k, l=args.l, n=args.n)
    if kind == "degree-only":
        _require(args, ["n", "k"], kind)
        return degree_only_family(n=args.n, k=args.k, promise=args.promise)
    if kind == "moments-hiding":
        _require(args, ["s", "alpha", "c", "m_tilde", "blocks"], kind)
        return moments_hiding_family(
            s=args.s,
            alpha=args.alpha,
            c=args.c,
            m_tilde=args.m_tilde,
            blocks=args.blocks,
            promise=args.promise,
        )
    if kind == "moments-block":
        _require(args, ["s", "alpha", "c", "m_tilde", "n_side"], kind)
        return moments_block_family(
            s=args.s,
            alpha=args.alpha,
            c=args.c,
            m_tilde=args.m_tilde,
            n_side=args.n_side,
            promise=args.promise,
        )
    raise ConfigError(f"unknown kind {kind!r}")


def _add_kind_params(p: argparse.ArgumentParser):
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--l", type=int, help="block side / block size")
    p.add_argument("--k", type=int, help="intersection multiplicity or block size")
    p.add_argument("--r", type=int, help="clique order (r-clique)")
    p.add_argument("--n", type=int, help="total vertex count (padded up if too small)")
    p.add_argument("--s-size", type=int, dest="s_size", help="witness set size (triangle)")
    p.add_argument("--blocks", type=int, help="number of hiding blocks")
    p.add_argument("--base-n", type=int, dest="base_n", default=4, help="base graph vertices")
    p.add_argument("--base-m", type=int, dest="base_m", default=3, help="base graph edges")
    p.add_argument("--augment-connect", action="store_true", dest="augment_connect",
                   help="attach every vertex to a hub (diameter-2 variant)")
    p.add_argument("--s", type=int, help="degree-moment order")
    p.add_argument("--alpha", type=int, help="arboricity target")
    p.add_argument("--c", type=int, help="moment gap factor")
    p.add_argument("--m-tilde", type=int, dest="m_tilde", help="moment scale")
    p.add_argument("--n-side", type=int, dest="n_side", help="bipartite side size")
    p.add_argument("--s-clique-budget", type=int, dest="s_clique_budget",
                   help="sparse-S transversal budget (r-clique)")
    p.add_argument("--promise", default="unique-intersection",
                   choices=["disjoint", "unique-intersection"],
                   help="promise for the disjointness-based kinds")


def _instance_for(args):
    family = family_from_args(args)
    pp = gen_promise_instance(family.n_bits, family.promise, derive_seed(args.seed, 0))
    if args.side != "coin":
        want = args.side == "intersecting"
        attempt = 0
        while pp.intersecting != want:
            attempt += 1
            if attempt > 10_000:
                raise ConfigError(f"cannot draw a {args.side} instance for this promise")
            pp = gen_promise_instance(
                family.n_bits, family.promise, derive_seed(args.seed, 0, attempt)
            )
    inst = family.build(pp)
    inst.seed = args.seed
    return inst


def cmd_gen(args) -> int:
    inst = _instance_for(args)
    out = Path(args.out)
    out.write_text(json.dumps(instance_to_json(inst), sort_keys=True, indent=2) + "\n")
    print(f"wrote {out}")
    try:
        g = inst.materialize()
        edges_path = out.with_suffix(".edges")
        edges_path.write_text(dump_edge_list(g))
        print(f"wrote {edges_path} (n={g.n}, m={g.m})")
    except MaterializationCapExceeded as exc:
        print(f"edge list skipped: {exc}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    from .graph import load_edge_list
    from .verify import verify_instance

    obj = json.loads(Path(args.instance).read_text())
    inst = instance_from_json(obj)
    g = load_edge_list(Path(args.edges).read_text()) if args.edges else None
    try:
        reports = verify_instance(inst, g)
    except MaterializationCapExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in reports]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"FAIL {r.quantity}: value {r.value}, claim {r.claim}", file=sys.stderr)
    return 1 if failed else 0


def cmd_simulate(args) -> int:
    family = family_from_args(args)
    d = distinguisher_by_name(args.distinguisher)
    if family.kind not in d.supports:
        raise ConfigError(
            f"distinguisher {d.name} does not support queries on {family.kind}"
        )
    writer = None
    handle = None
    if args.transcripts:
        handle = open(args.transcripts, "w", newline="")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(TRANSCRIPT_CSV_HEADER)

    def on_trial(trial, output, truth, transcript):
        if writer is not None and transcript is not None:
            writer.writerows(transcript.csv_rows(trial))

    try:
        row = run_distinguisher_trials(
            family, d, args.budget, args.trials, args.seed, on_trial=on_trial
        )
    finally:
        if handle is not None:
            handle.close()
    print(
        f"kind={row.kind} N={row.n_bits} budget={row.budget} trials={row.trials} "
        f"success={row.success:.4f} mean_bits={row.mean_bits:.2f} "
        f"max_bits_per_query={row.max_bits_per_query}"
    )
    return 0


def _sweep_family_for(args):
    kind = args.kind

    def family_for(n_bits: int):
        if kind == "clique-hiding":
            return clique_hiding_family(
                blocks=n_bits,
                l=args.l if args.l is not None else 2,
                base_n=args.base_n,
                base_m=args.base_m,
                augment_connect=args.augment_connect,
                promise=args.promise,
            )
        if kind == "moments-hiding":
            _require(args, ["s", "alpha", "c", "m_tilde"], kind)
            return moments_hiding_family(
                s=args.s, alpha=args.alpha, c=args.c,
                m_tilde=args.m_tilde, blocks=n_bits, promise=args.promise,
            )
        if kind == "degree-only":
            _require(args, ["k"], kind)
            return degree_only_family(n=3 * args.k * n_bits, k=args.k, promise=args.promise)
        if kind in ("triangle", "r-clique", "connectivity"):
            side = math.isqrt(n_bits)
            if side * side != n_bits:
                raise ConfigError(f"grid entry {n_bits} is not a perfect square (N = l^2)")
            if kind == "triangle":
                _require(args, ["k"], kind)
                return triangle_family(l=side, k=args.k, n=args.n, s_size=args.s_size)
            if kind == "r-clique":
                _require(args, ["r", "k"], kind)
                return r_clique_family(r=args.r, l=side, k=args.k, n=args.n)
            _require(args, ["k"], kind)
            return connectivity_family(k=args.k, l=side, n=args.n)
        raise ConfigError(f"sweep does not support kind {kind!r}")

    return family_for


def cmd_sweep(args) -> int:
    d = distinguisher_by_name(args.distinguisher)
    grid = [int(tok) for tok in args.grid.split(",") if tok]
    family_for = _sweep_family_for(args)
    rows = []
    for idx, n_bits in enumerate(grid):
        try:
            family = family_for(n_bits)
        except (ConfigError, ParameterError) as exc:
            print(f"skipping N={n_bits}: {exc}", file=sys.stderr)
            continue
        t_star, used, warn, _ = minimal_budget(
            family, d, args.trials, derive_seed(args.seed, idx)
        )
        if t_star is None:
            print(f"skipping N={n_bits}: no budget reached 2/3 success", file=sys.stderr)
            continue
        row = run_distinguisher_trials(
            family, d, t_star, used, derive_seed(args.seed, idx, 0xFF)
        )
        if warn:
            print(f"warning: N={n_bits} needed widened trials", file=sys.stderr)
        rows.append(row)
    with open(args.out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SWEEP_CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_tuple())
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commgraph",
        description="Gap-instance constructions over two-party inputs: "
        "generate, verify, simulate, sweep.",
        epilog=PARAM_SCHEMA,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate an instance JSON (+ edge list)",
                           epilog=PARAM_SCHEMA,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_kind_params(p_gen)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", default="instance.json")
    p_gen.add_argument("--side", default="coin",
                       choices=["coin", "disjoint", "intersecting"])
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="run the gap-claim verifier suite")
    p_verify.add_argument("--instance", required=True)
    p_verify.add_argument("--edges", help="edge-list file to check against the instance")
    p_verify.add_argument("--out", help="report JSONL path (default: stdout)")
    p_verify.set_defaults(func=cmd_verify)

    p_sim = sub.add_parser("simulate", help="run distinguisher trials with transcripts",
                           epilog=PARAM_SCHEMA,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_kind_params(p_sim)
    p_sim.add_argument("--distinguisher", required=True)
    p_sim.add_argument("--budget", type=int, required=True)
    p_sim.add_argument("--trials", type=int, default=100)
    p_sim.add_argument("--seed", type=int, required=True)
    p_sim.add_argument("--transcripts", help="transcript CSV path")
    p_sim.set_defaults(func=cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="threshold sweep over instance sizes",
                             epilog=PARAM_SCHEMA,
                             formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_kind_params(p_sweep)
    p_sweep.add_argument("--distinguisher", required=True)
    p_sweep.add_argument("--grid", required=True, help="comma-separated N values")
    p_sweep.add_argument("--trials", type=int, default=400)
    p_sweep.add_argument("--seed", type=int, required=True)
    p_sweep.add_argument("--out", default="sweep.csv")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
