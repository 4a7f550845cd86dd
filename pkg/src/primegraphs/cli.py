"""Command-line entry points.

Exit codes: 0 success, 1 negative answer / nothing found, 2 input error or
refusal, 3 budget exhausted, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, configs, formats, modules, pipeline, typetree
from .errors import BudgetExhausted, InputError, InvariantViolation, Refusal
from .graph import Graph
from .oracles import oracle_check

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET, EXIT_BUG = 0, 1, 2, 3, 4


def _load(path: str) -> list[Graph]:
    if path == "-":
        text = sys.stdin.read()
    else:
        p = Path(path)
        if not p.exists():
            raise InputError(f"no such file: {path}")
        text = p.read_text()
    if formats.looks_like_adjlist(text):
        return [formats.parse_adjlist(text)]
    graphs = [formats.parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise InputError(f"{path}: no graphs found")
    return graphs


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_is_prime(args) -> int:
    code = EXIT_OK
    for g in _load(args.file):
        r = modules.is_prime(g)
        out = {"order": g.order, "prime": r.prime}
        if not r.prime:
            out["module"] = sorted(r.counterexample)
            code = EXIT_NEGATIVE
        _emit(out)
    return code


def cmd_chain_radius(args) -> int:
    code = EXIT_OK
    for g in _load(args.file):
        r = modules.chain_radius(g, args.budget)
        _emit({"order": g.order, "chain_radius": r})
        if r is None:
            code = EXIT_NEGATIVE
    return code


def cmd_type_tree(args) -> int:
    graphs = _load(args.file)
    dots = []
    for i, g in enumerate(graphs):
        tree = typetree.arrange_full(g, "min" if args.seed is None else "random", args.seed)
        tree.check()
        rep = typetree.verify_rank_height(g, tree)
        out = tree.to_json()
        out["report"] = {"order": rep.order, "max_element_rank": rep.max_element_rank,
                         "longest_branch": rep.longest_branch, "bound": rep.bound, "holds": rep.holds}
        _emit(out)
        dots.append(tree.to_dot(f"T{i}"))
    if args.dot:
        Path(args.dot).write_text("".join(dots))
    return EXIT_OK


def cmd_ladder_index(args) -> int:
    for g in _load(args.file):
        cap = args.cap if args.cap is not None else max(1, g.order // 2)
        k = configs.ladder_index(g, cap, args.budget)
        _emit({"order": g.order, "cap": cap, "ladder_index": k})
    return EXIT_OK


def cmd_find_witness(args) -> int:
    b = args.budget
    cfg = pipeline.RunConfig(args.n, b, b, b, seed=args.seed)
    code = EXIT_OK
    for g in _load(args.file):
        res = pipeline.find_witness(g, cfg)
        if args.json:
            _emit(res.to_json())
        elif res.witness:
            print(f"{res.route.value}: {res.witness.describe()}")
        else:
            print("no witness found")
        if res.witness is None:
            exhausted = any(t.get("outcome") == "budget exhausted" for t in res.trace)
            code = max(code, EXIT_BUDGET if exhausted else EXIT_NEGATIVE)
    return code


def cmd_bounds(args) -> int:
    _emit(bounds.bound_report(args.n).to_json())
    return EXIT_OK


def cmd_compare_bounds(args) -> int:
    c = bounds.compare_bounds(args.n)
    _emit(c.to_json())
    return EXIT_OK if c.all_true else EXIT_NEGATIVE


def cmd_oracle_check(args) -> int:
    code = EXIT_OK
    for g in _load(args.file):
        r = oracle_check(g)
        _emit(r.to_json())
        if not r.ok:
            code = EXIT_NEGATIVE
    return code


def cmd_corpus(args) -> int:
    cfg = pipeline.RunConfig(args.n, args.budget, args.budget, args.budget, seed=args.seed)
    rows = pipeline.run_corpus(args.spec, cfg, workers=args.workers)
    text = pipeline.rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_generate(args) -> int:
    g = configs.build_config(configs.ConfigKind.parse(args.kind), args.n)
    sys.stdout.write(formats.emit_graph6(g) + "\n" if args.graph6 else formats.emit_adjlist(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="primegraphs", description="Prime graphs, chains, type trees and witnesses.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_file(name: str, fn, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="graph6 lines or a 'p n m' adjacency list ('-' for stdin)")
        p.set_defaults(fn=fn)
        return p

    with_file("is-prime", cmd_is_prime, "primality, with a nontrivial module when not prime")
    p = with_file("chain-radius", cmd_chain_radius, "least n such that every triple has a chain of length <= n")
    p.add_argument("--budget", type=int, default=None)
    p = with_file("type-tree", cmd_type_tree, "full type-tree arrangement as JSON")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--dot", default=None, help="also write the tree(s) as DOT")
    p = with_file("ladder-index", cmd_ladder_index, "largest half-graph pattern height")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    p = with_file("find-witness", cmd_find_witness, "run the witness pipeline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=2_000_000, help="node budget per phase")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    with_file("oracle-check", cmd_oracle_check, "cross-check fast code against brute force (order <= 8)")

    p = sub.add_parser("bounds", help="the bound functions at n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_bounds)
    p = sub.add_parser("compare-bounds", help="check the new bound against (sqrt 2)^m")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_compare_bounds)
    p = sub.add_parser("corpus", help="per-graph statistics table as CSV")
    p.add_argument("spec", help="file, atlas:<k>, atlas-connected:<k>, planted:<lo>-<hi> or random:<c>:<k>:<seed>")
    p.add_argument("--out", default=None)
    p.add_argument("--n", type=int, default=4, help="largest witness height tried")
    p.add_argument("--budget", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=cmd_corpus)
    p = sub.add_parser("generate", help="emit a named configuration")
    p.add_argument("--kind", required=True, choices=[k.value for k in configs.ConfigKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph6", action="store_true")
    p.set_defaults(fn=cmd_generate)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, Refusal) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
