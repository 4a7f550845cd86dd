"""Slow, direct re-implementations used to cross-check the fast code.

Nothing here shares logic with :mod:`modules` or the pattern search in
:mod:`configs`: modules are found by enumerating subsets, chains by
enumerating sequences, and induced copies by comparing every vertex subset
against a precomputed set of acceptable adjacency tables.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .configs import ConfigKind, Witness, find_induced, pattern, verify_witness
from .errors import Refusal
from .graph import Graph
from .modules import find_chain, is_prime, module_closure
from .typetree import extract_homogeneous, homogeneous_lower_bound

ORACLE_MAX_ORDER = 8


def _adj(g: Graph, u: int, v: int) -> bool:
    return bool(g.rows[u] >> v & 1)


def subset_is_module(g: Graph, s: frozenset[int] | set[int]) -> bool:
    for z in range(g.order):
        if z in s:
            continue
        seen = {_adj(g, z, x) for x in s}
        if len(seen) > 1:
            return False
    return True


def brute_force_prime(g: Graph) -> bool:
    """No vertex set of size 2..order-1 is a module."""
    for k in range(2, g.order):
        for s in combinations(range(g.order), k):
            if subset_is_module(g, set(s)):
                return False
    return True


def brute_force_closure(g: Graph, pair: tuple[int, int]) -> frozenset[int]:
    """Smallest module containing the pair, by scanning supersets in order of size."""
    others = [v for v in range(g.order) if v not in pair]
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            s = set(pair) | set(extra)
            if subset_is_module(g, s):
                return frozenset(s)
    raise AssertionError("the full vertex set is always a module")


def is_chain_direct(g: Graph, seq: tuple[int, ...]) -> bool:
    """Each later vertex sees its predecessor as unique neighbour or unique non-neighbour."""
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    for i in range(2, len(seq)):
        w, prev = seq[i], seq[:i]
        nbrs = [u for u in prev if _adj(g, w, u)]
        non = [u for u in prev if not _adj(g, w, u)]
        if nbrs != [seq[i - 1]] and non != [seq[i - 1]]:
            return False
    return True


def chain_exists_direct(g: Graph, pair: tuple[int, int], target: int) -> bool:
    """Depth-first over all sequences from the pair, no memoisation."""
    x, y = pair

    def grow(seq: tuple[int, ...]) -> bool:
        for w in range(g.order):
            if w in seq:
                continue
            cand = seq + (w,)
            if is_chain_direct(g, cand):
                if w == target or grow(cand):
                    return True
        return False

    return grow((x, y)) or grow((y, x))


def prime_by_chains(g: Graph) -> bool:
    """The all-triples chain criterion, evaluated with the fast chain search."""
    if g.order < 3:
        return True
    for x, y in combinations(range(g.order), 2):
        for z in range(g.order):
            if z not in (x, y) and find_chain(g, (x, y), z) is None:
                return False
    return True


# -- induced copies -------------------------------------------------------------


def _pair_index(k: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(combinations(range(k), 2))}


@lru_cache(maxsize=None)
def acceptable_tables(kind: ConfigKind, n: int) -> frozenset[int]:
    """Adjacency tables (bit per pair of positions 0..k-1) of labelled copies of the pattern.

    Built from the pattern's constraint table alone, by placing roles on
    positions in every order and filling unconstrained pairs every way.
    """
    p = pattern(kind, n)
    k = p.size
    index = _pair_index(k)
    constrained = {}
    for (i, j), a in p.constraints.items():
        constrained[(i, j)] = a
    free = [ij for ij in combinations(range(k), 2) if ij not in constrained]
    out = set()
    for fill in product((False, True), repeat=len(free)):
        adj = dict(constrained)
        adj.update(zip(free, fill))
        for perm in permutations(range(k)):  # role r sits at position perm[r]
            mask = 0
            for (i, j), a in adj.items():
                if a:
                    u, v = perm[i], perm[j]
                    mask |= 1 << index[(u, v) if u < v else (v, u)]
            out.add(mask)
    return frozenset(out)


def induced_oracle(g: Graph, kind: ConfigKind, n: int) -> bool:
    """Does some vertex subset of g induce a copy of the configuration?"""
    if kind is ConfigKind.PrimeChain:
        return prime_chain_oracle(g, n)
    k = pattern(kind, n).size
    if k > g.order:
        return False
    tables = acceptable_tables(kind, n)
    index = _pair_index(k)
    for s in combinations(range(g.order), k):
        mask = 0
        for (i, j), b in index.items():
            if _adj(g, s[i], s[j]):
                mask |= 1 << b
        if mask in tables:
            return True
    return False


def _induced(g: Graph, vs: tuple[int, ...]) -> Graph:
    return Graph.from_edges(len(vs), [(i, j) for i, j in combinations(range(len(vs)), 2) if _adj(g, vs[i], vs[j])])


def prime_chain_oracle(g: Graph, n: int) -> bool:
    """Some sequence of n+1 distinct vertices is a chain inducing a prime graph."""
    if n + 1 > g.order:
        return False
    prime_sets: dict[tuple[int, ...], bool] = {}
    for seq in permutations(range(g.order), n + 1):
        if not is_chain_direct(g, seq):
            continue
        key = tuple(sorted(seq))
        if key not in prime_sets:
            prime_sets[key] = brute_force_prime(_induced(g, key))
        if prime_sets[key]:
            return True
    return False


# -- combined report ---------------------------------------------------------------


Detector = Callable[[Graph, ConfigKind, int], "Witness | None"]

ORACLE_KINDS = tuple(k for k in ConfigKind if k is not ConfigKind.PrimeChain)


@dataclass
class OracleReport:
    order: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.failures.append(f"{name}: {detail}" if detail else name)

    def to_json(self) -> dict:
        return {"order": self.order, "ok": self.ok, "checks": dict(self.checks), "failures": list(self.failures)}


def _default_detector(g: Graph, kind: ConfigKind, n: int) -> Witness | None:
    return find_induced(g, kind, n)


def oracle_check(g: Graph, detector: Detector | None = None, max_n: int = 3) -> OracleReport:
    """Run every fast-versus-brute-force cross-check on one small graph.

    ``detector`` replaces :func:`find_induced` (fault injection in tests).
    """
    if g.order > ORACLE_MAX_ORDER:
        raise Refusal(f"oracle checks enumerate subsets and are limited to order <= {ORACLE_MAX_ORDER}, got {g.order}")
    detector = detector or _default_detector
    rep = OracleReport(g.order)

    fast = is_prime(g).prime
    slow = brute_force_prime(g)
    rep.record("primality", fast == slow, f"is_prime={fast}, subsets={slow}")
    if g.order >= 3:
        by_chain = prime_by_chains(g)
        rep.record("chain criterion", by_chain == slow, f"chains={by_chain}, subsets={slow}")

    for pair in combinations(range(g.order), 2):
        closure = module_closure(g, pair)
        rep.record("closure", closure == brute_force_closure(g, pair), f"pair {pair}")
        for z in range(g.order):
            if z in pair:
                continue
            has = find_chain(g, pair, z) is not None
            rep.record("chain vs closure", has == (z in closure), f"pair {pair}, target {z}")
            rep.record("chain search", has == chain_exists_direct(g, pair, z), f"pair {pair}, target {z}")

    for kind in ORACLE_KINDS:
        for n in range(1, max_n + 1):
            w = detector(g, kind, n)
            truth = induced_oracle(g, kind, n)
            ok = (w is not None) == truth and (w is None or verify_witness(g, w))
            rep.record("detector", ok, f"{kind.value} n={n}: detector={'found' if w else 'none'}, oracle={truth}")
    for n in range(3, max_n + 1):
        w = find_induced(g, ConfigKind.PrimeChain, n)
        truth = prime_chain_oracle(g, n)
        rep.record("prime chain", (w is not None) == truth, f"n={n}")

    if g.order >= 1:
        hr = extract_homogeneous(g)
        t, h = hr.rank_found, hr.report.longest_branch
        need = max(t, math.ceil(h / 2))
        ok = len(hr.vertices) >= need and len(hr.vertices) >= homogeneous_lower_bound(g.order, max(t, 1))
        rep.record("homogeneous size", ok, f"|set|={len(hr.vertices)}, t={t}, h={h}")
    return rep
