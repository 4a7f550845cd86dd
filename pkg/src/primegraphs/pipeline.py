"""The find-witness engine and corpus runs.

``find_witness`` walks the main theorem's case analysis: a long chain, then a
full binary type tree read through a Ramsey colouring, then a large
homogeneous set, and finally a plain detector scan. Each step runs only where
its hypothesis can be checked exactly at the instance size; everything else
falls through, and every branch taken is written to the trace.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .configs import ConfigKind, Witness, chain_roles, detect_any, find_induced, ladder_index, verify_witness
from .corpus import Entry, iter_corpus
from .errors import Budget, BudgetExhausted, InputError, InvariantViolation
from .graph import Graph, complement
from .modules import chain_radius, find_long_chain, is_prime, shrink_to_prime_chain
from .oracles import ORACLE_MAX_ORDER, induced_oracle
from .ramsey import ramsey_exact
from .typetree import arrange_full, extract_config_from_tree, extract_homogeneous, longest_branch, \
    max_element_rank, spine_pairs, tree_rank_witness

K = ConfigKind


class Route(enum.Enum):
    ChainRoute = "ChainRoute"
    TreeExtractionRoute = "TreeExtractionRoute"
    HomogeneousSetRoute = "HomogeneousSetRoute"
    DetectorFallback = "DetectorFallback"
    NoneFound = "NoneFound"


#: families the tree and homogeneous routes search for directly, each with its complement
TERMINAL_FAMILIES = (K.HPrimeNI, K.HStarN, K.StarSubdivision, K.LineK2n, K.ThinSpider)


@dataclass(frozen=True)
class RunConfig:
    n: int
    chain_budget: int | None = 200_000
    tree_budget: int | None = 200_000
    detector_budget: int | None = 2_000_000
    seed: int | None = None
    oracle_mode: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InputError("n must be an integer >= 2")
        for b in (self.chain_budget, self.tree_budget, self.detector_budget):
            if b is not None and b < 0:
                raise InputError("budgets must be >= 0")


@dataclass
class PipelineResult:
    witness: Witness | None
    route: Route
    trace: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "route": self.route.value,
            "witness": self.witness.to_json() if self.witness else None,
            "trace": self.trace,
        }

    def trace_text(self) -> str:
        return "\n".join(json.dumps(t, sort_keys=False) for t in self.trace)


class _Trace(list):
    def note(self, step: str, **info) -> None:
        self.append({"step": step, **info})


def _gate(g: Graph, w: Witness, trace: _Trace) -> Witness:
    if not verify_witness(g, w):
        raise InvariantViolation(f"pipeline produced an unverified witness: {w.describe()}")
    trace.note("verify", witness=w.describe(), ok=True)
    return w


def _scan(g: Graph, plan: Iterable[tuple[ConfigKind, bool]], n: int, budget: Budget,
          trace: _Trace, step: str) -> tuple[Witness | None, bool]:
    """First verified copy in ``plan``; the flag reports whether the budget ran out."""
    for kind, comp in plan:
        try:
            w = find_induced(g, kind, n, budget, comp)
        except BudgetExhausted:
            trace.note(step, kind=kind.value, complemented=comp, outcome="budget exhausted")
            return None, True
        except InputError as exc:
            trace.note(step, kind=kind.value, complemented=comp, outcome="skipped", reason=str(exc))
            continue
        trace.note(step, kind=kind.value, complemented=comp, outcome="found" if w else "absent")
        if w is not None:
            return w, False
    return None, False


def _terminal_plan() -> list[tuple[ConfigKind, bool]]:
    return [(k, c) for k in TERMINAL_FAMILIES for c in (False, True)]


def _chain_route(g: Graph, cfg: RunConfig, trace: _Trace) -> tuple[Witness | None, bool]:
    n = cfg.n
    if n < 3:
        trace.note("chain", outcome="skipped", reason="a prime chain needs length >= 3")
        return None, False
    budget = Budget(cfg.chain_budget)
    try:
        c = find_long_chain(g, n + 1, budget)
    except BudgetExhausted:
        trace.note("chain", length=n + 1, outcome="budget exhausted")
        return None, True
    if c is None:
        trace.note("chain", length=n + 1, outcome="absent")
        return None, False
    trace.note("chain", length=n + 1, outcome="found", vertices=list(c.vertices))
    try:
        short = shrink_to_prime_chain(g, c, budget)
    except BudgetExhausted:
        trace.note("shrink", outcome="budget exhausted")
        return None, True
    trace.note("shrink", outcome="prime chain", vertices=list(short.vertices))
    return Witness(K.PrimeChain, n, chain_roles(short.vertices)), False


def _tree_route(g: Graph, cfg: RunConfig, trace: _Trace) -> tuple[Witness | None, bool]:
    n = cfg.n
    sizes = (n, n, n, n)
    threshold = ramsey_exact(sizes)
    exhausted = False
    for comp in (False, True):
        h = complement(g) if comp else g
        rank = tree_rank_witness(h, budget=Budget(cfg.tree_budget))
        exhausted |= not rank.exact
        pairs = len(spine_pairs(rank.tree)) if rank.tree else 0
        info = dict(complemented=comp, tree_rank=rank.rank, rank_exact=rank.exact, spine_pairs=pairs,
                    ramsey_sizes=list(sizes), threshold=threshold)
        if threshold is None:
            trace.note("tree", **info, outcome="fallthrough", reason="Ramsey threshold not known exactly")
            continue
        if pairs < threshold:
            trace.note("tree", **info, outcome="fallthrough", reason="spine below threshold")
            continue
        w = extract_config_from_tree(rank.tree, n, n, n)
        trace.note("tree", **info, outcome="extracted", kind=w.kind.value)
        if w.kind in (K.ThinSpider, K.BipartiteHalfGraph):
            return Witness(w.kind, w.height, w.roles, comp), False
        # HalfSplitGraph / InducedMatching: the terminal families are searched directly
        found, out = _scan(g, _terminal_plan(), n, Budget(cfg.detector_budget), trace, "tree-terminal")
        if found is not None:
            return found, False
        exhausted |= out
    return None, exhausted


def _homogeneous_route(g: Graph, cfg: RunConfig, trace: _Trace) -> tuple[Witness | None, bool]:
    hr = extract_homogeneous(g, cfg.seed, Budget(cfg.tree_budget))
    trace.note("homogeneous", size=len(hr.vertices), flag=hr.flag, vertices=sorted(hr.vertices),
               tree_rank=hr.rank_found, longest_branch=hr.report.longest_branch)
    if len(hr.vertices) < cfg.n:
        trace.note("homogeneous", outcome="fallthrough", reason="set smaller than n")
        return None, False
    return _scan(g, _terminal_plan(), cfg.n, Budget(cfg.detector_budget), trace, "homogeneous-terminal")


def find_witness(g: Graph, cfg: RunConfig) -> PipelineResult:
    trace = _Trace()
    pr = is_prime(g)
    if pr.prime:
        trace.note("primality", prime=True)
    else:
        trace.note("primality", prime=False, module=sorted(pr.counterexample),
                   warning="input is not prime; the theorem's hypothesis fails")
    exhausted = False
    routes: list[tuple[Route, Callable]] = [
        (Route.ChainRoute, _chain_route),
        (Route.TreeExtractionRoute, _tree_route),
        (Route.HomogeneousSetRoute, _homogeneous_route),
    ]
    for route, step in routes:
        w, out = step(g, cfg, trace)
        exhausted |= out
        if w is not None:
            return _finish(g, cfg, w, route, trace)
    try:
        w = detect_any(g, cfg.n, Budget(cfg.detector_budget))
    except BudgetExhausted:
        trace.note("detect", outcome="budget exhausted")
        exhausted = True
        w = None
    else:
        trace.note("detect", outcome="found" if w else "absent")
    if w is not None:
        return _finish(g, cfg, w, Route.DetectorFallback, trace)
    trace.note("result", outcome="none found", budget_exhausted=exhausted)
    return PipelineResult(None, Route.NoneFound, list(trace))


def _finish(g: Graph, cfg: RunConfig, w: Witness, route: Route, trace: _Trace) -> PipelineResult:
    w = _gate(g, w, trace)
    if cfg.oracle_mode and g.order <= ORACLE_MAX_ORDER:
        host = complement(g) if w.complemented else g
        ok = induced_oracle(host, w.kind, w.height)
        trace.note("oracle", kind=w.kind.value, agrees=ok)
        if not ok:
            raise InvariantViolation("oracle does not confirm the witness")
    trace.note("result", route=route.value, witness=w.describe())
    return PipelineResult(w, route, list(trace))


# -- corpus runs ------------------------------------------------------------------


COLUMNS = ("label", "order", "prime", "chain_radius", "ladder_index", "tree_rank", "max_element_rank",
           "longest_branch", "rank_height_ok", "witness_n", "witness_kind", "complemented", "route",
           "expected", "recovered", "error")

#: chain_radius is computed only up to this order
RADIUS_MAX_ORDER = 16


def corpus_row(entry: Entry, cfg: RunConfig) -> dict:
    row = {c: "" for c in COLUMNS}
    row["label"] = entry.label
    if entry.graph is None:
        row["error"] = entry.error or "unreadable"
        return row
    g = entry.graph
    row["order"] = g.order
    row["prime"] = is_prime(g).prime
    if 3 <= g.order <= RADIUS_MAX_ORDER:
        try:
            r = chain_radius(g, Budget(cfg.chain_budget))
            row["chain_radius"] = "none" if r is None else r
        except BudgetExhausted:
            row["chain_radius"] = "budget"
    try:
        row["ladder_index"] = ladder_index(g, cfg.n, Budget(cfg.detector_budget))
    except BudgetExhausted as exc:
        row["ladder_index"] = f">={exc.lower_bound}"
    if g.order:
        rank = tree_rank_witness(g, budget=Budget(cfg.tree_budget))
        row["tree_rank"] = rank.rank if rank.exact else f">={rank.rank}"
        tree = arrange_full(g, "min" if cfg.seed is None else "random", cfg.seed)
        t, h = max_element_rank(tree), len(longest_branch(tree))
        row["max_element_rank"], row["longest_branch"] = t, h
        row["rank_height_ok"] = g.order <= t * (2 * h) ** (t + 1)
    best = None
    for n in range(2, cfg.n + 1):
        res = find_witness(g, RunConfig(n, cfg.chain_budget, cfg.tree_budget, cfg.detector_budget, cfg.seed))
        if res.witness is None:
            break
        best = (n, res)
    if best is not None:
        n, res = best
        row["witness_n"] = n
        row["witness_kind"] = res.witness.kind.value
        row["complemented"] = res.witness.complemented
        row["route"] = res.route.value
    if entry.expected is not None:
        kind, n, comp = entry.expected
        row["expected"] = f"{'co-' if comp else ''}{kind.value}:{n}"
        res = find_witness(g, RunConfig(n, cfg.chain_budget, cfg.tree_budget, cfg.detector_budget, cfg.seed))
        row["recovered"] = res.witness is not None and verify_witness(g, res.witness)
    return row


def _row_job(args: tuple[Entry, RunConfig]) -> dict:
    return corpus_row(*args)


def run_corpus(spec: str | Iterable[Entry], cfg: RunConfig, workers: int = 1) -> list[dict]:
    """One row per corpus entry, in input order."""
    entries = list(iter_corpus(spec) if isinstance(spec, str) else spec)
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_row_job, [(e, cfg) for e in entries], chunksize=8))
    return [corpus_row(e, cfg) for e in entries]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
