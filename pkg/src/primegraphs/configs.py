"""Named configurations: constructors, witness checking and induced-copy search.

Every kind except ``PrimeChain`` is described by a :class:`Pattern`: a list of
role names plus a table of constrained role pairs (adjacent or not). Pairs not
in the table are free, which is how ``HalfGraphPattern`` leaves same-side
adjacencies open. ``build_config`` realises a pattern with free pairs
non-adjacent; ``find_induced`` backtracks over role assignments.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import Budget, BudgetExhausted, InputError, as_budget
from .graph import Graph, bits, complement, induced_subgraph, path_graph
from .modules import _extensions, is_chain, is_prime


class ConfigKind(enum.Enum):
    BipartiteHalfGraph = "BipartiteHalfGraph"
    HalfSplitGraph = "HalfSplitGraph"
    HalfGraphPattern = "HalfGraphPattern"
    HPrimeNI = "HPrimeNI"
    HStarN = "HStarN"
    ThinSpider = "ThinSpider"
    ThickSpider = "ThickSpider"
    InducedMatching = "InducedMatching"
    LineK2n = "LineK2n"
    StarSubdivision = "StarSubdivision"
    PrimeChain = "PrimeChain"

    @classmethod
    def parse(cls, name: str) -> ConfigKind:
        for k in cls:
            if k.value.lower() == name.lower():
                return k
        raise InputError(f"unknown configuration kind {name!r}")


K = ConfigKind

#: Families of the main theorem, in the order ``detect_any`` scans them.
THEOREM_FAMILIES = (
    K.ThinSpider,
    K.BipartiteHalfGraph,
    K.StarSubdivision,
    K.LineK2n,
    K.HPrimeNI,
    K.HStarN,
    K.PrimeChain,
)

# no graph on three vertices is prime, so a prime chain has length >= 3
MIN_HEIGHT = {k: 1 for k in ConfigKind} | {K.PrimeChain: 3}


def min_height(kind: ConfigKind) -> int:
    return MIN_HEIGHT[kind]


@dataclass(frozen=True)
class Pattern:
    kind: ConfigKind
    n: int
    roles: tuple[str, ...]
    constraints: dict[tuple[int, int], bool] = field(hash=False)
    search_order: tuple[int, ...]
    increasing: tuple[int, ...] = ()

    @property
    def size(self) -> int:
        return len(self.roles)

    def required(self, i: int, j: int) -> bool | None:
        return self.constraints.get((i, j) if i < j else (j, i))


@lru_cache(maxsize=None)
def pattern(kind: ConfigKind, n: int) -> Pattern:
    if kind is K.PrimeChain:
        raise InputError("PrimeChain is not a fixed pattern")
    if n < MIN_HEIGHT[kind]:
        raise InputError(f"{kind.value} needs height >= {MIN_HEIGHT[kind]}")
    A = [f"a{i}" for i in range(1, n + 1)]
    B = [f"b{i}" for i in range(1, n + 1)]
    cons: dict[tuple[int, int], bool] = {}

    def put(i: int, j: int, adj: bool) -> None:
        cons[(i, j) if i < j else (j, i)] = adj

    def side(idx: list[int], adj: bool) -> None:
        for p in range(len(idx)):
            for q in range(p + 1, len(idx)):
                put(idx[p], idx[q], adj)

    def cross(ai: list[int], bi: list[int], rule) -> None:
        for i, u in enumerate(ai):
            for j, v in enumerate(bi):
                put(u, v, rule(i, j))

    increasing: tuple[int, ...] = ()
    if kind is K.ThickSpider:
        # b's first so the built graph is literally the complement of the thin spider
        roles = B + A
        bi, ai = list(range(n)), list(range(n, 2 * n))
    elif kind is K.StarSubdivision:
        # same numbering as subdivision(star_graph(n), 1): centre, leaves, midpoints
        roles = ["c"] + B + A
        bi, ai = list(range(1, n + 1)), list(range(n + 1, 2 * n + 1))
    else:
        roles = A + B
        ai, bi = list(range(n)), list(range(n, 2 * n))
        if kind in (K.HPrimeNI, K.HStarN):
            roles = roles + ["c"]

    half = lambda i, j: i <= j  # noqa: E731
    diag = lambda i, j: i == j  # noqa: E731
    off = lambda i, j: i != j  # noqa: E731

    if kind is K.HalfGraphPattern:
        cross(ai, bi, half)
    elif kind is K.BipartiteHalfGraph:
        cross(ai, bi, half)
        side(ai, False)
        side(bi, False)
    elif kind in (K.HalfSplitGraph, K.HPrimeNI, K.HStarN):
        cross(ai, bi, half)
        side(ai, False)
        side(bi, True)
        if kind is not K.HalfSplitGraph:
            c = 2 * n
            for i, u in enumerate(ai):
                put(c, u, True if kind is K.HPrimeNI else i == 0)
            for v in bi:
                put(c, v, False)
    elif kind in (K.ThinSpider, K.ThickSpider):
        cross(ai, bi, diag if kind is K.ThinSpider else off)
        side(ai, False)
        side(bi, True)
        increasing = tuple(ai)
    elif kind is K.InducedMatching:
        cross(ai, bi, diag)
        side(ai, False)
        side(bi, False)
        increasing = tuple(ai)
    elif kind is K.LineK2n:
        cross(ai, bi, diag)
        side(ai, True)
        side(bi, True)
        increasing = tuple(ai)
    elif kind is K.StarSubdivision:
        cross(ai, bi, diag)
        side(ai, False)
        side(bi, False)
        for u in ai:
            put(0, u, True)
        for v in bi:
            put(0, v, False)
        increasing = tuple(ai)
    else:  # pragma: no cover
        raise AssertionError(kind)

    order = [i for pair in zip(ai, bi) for i in pair]
    order = [r for r in range(len(roles)) if r not in order] + order
    return Pattern(kind, n, tuple(roles), cons, tuple(order), increasing)


def build_config(kind: ConfigKind, n: int) -> Graph:
    if kind is K.PrimeChain:
        if n < MIN_HEIGHT[kind]:
            raise InputError("PrimeChain needs height >= 3")
        return path_graph(n + 1)
    p = pattern(kind, n)
    return Graph.from_edges(p.size, (ij for ij, adj in p.constraints.items() if adj))


@dataclass(frozen=True)
class Witness:
    kind: ConfigKind
    height: int
    roles: tuple[tuple[str, int], ...]
    complemented: bool = False

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.roles)

    def role(self, name: str) -> int:
        for r, v in self.roles:
            if r == name:
                return v
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "height": self.height,
            "complemented": self.complemented,
            "roles": [{"role": r, "vertex": v} for r, v in self.roles],
        }

    @classmethod
    def from_json(cls, data: dict) -> Witness:
        return cls(
            ConfigKind.parse(data["kind"]),
            int(data["height"]),
            tuple((r["role"], int(r["vertex"])) for r in data["roles"]),
            bool(data["complemented"]),
        )

    def describe(self) -> str:
        c = "complement of " if self.complemented else ""
        return f"{c}{self.kind.value}(n={self.height}) on {list(self.vertices)}"


def chain_roles(seq) -> tuple[tuple[str, int], ...]:
    return tuple((f"v{i}", v) for i, v in enumerate(seq))


def verify_witness(g: Graph, w: Witness) -> bool:
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not (isinstance(v, int) and 0 <= v < g.order) for v in vs):
        return False
    h = complement(g) if w.complemented else g
    if w.kind is K.PrimeChain:
        if w.height < MIN_HEIGHT[K.PrimeChain] or [r for r, _ in w.roles] != [f"v{i}" for i in range(w.height + 1)]:
            return False
        return is_chain(h, vs, vs[:2]) and is_prime(induced_subgraph(h, vs)[0]).prime
    try:
        p = pattern(w.kind, w.height)
    except InputError:
        return False
    if tuple(r for r, _ in w.roles) != p.roles:
        return False
    return all(h.adjacent(vs[i], vs[j]) == adj for (i, j), adj in p.constraints.items())


# -- search -------------------------------------------------------------------


def _search_pattern(g: Graph, p: Pattern, budget: Budget) -> list[int] | None:
    order = p.search_order
    pos = {r: d for d, r in enumerate(order)}
    # for each depth: (earlier depth, required adjacency)
    checks = [[(pos[q], adj) for q in order[:d] if (adj := p.required(r, q)) is not None]
              for d, r in enumerate(order)]
    prev_inc = {}
    for a, b in zip(p.increasing, p.increasing[1:]):
        prev_inc[pos[b]] = pos[a]
    rows = g.rows
    full = g.full_mask
    assign = [0] * len(order)

    def rec(d: int, used: int) -> bool:
        if d == len(order):
            return True
        budget.tick()
        cand = full & ~used
        for e, adj in checks[d]:
            v = assign[e]
            cand &= rows[v] if adj else ~rows[v]
        if d in prev_inc:
            cand &= ~((2 << assign[prev_inc[d]]) - 1)
        for v in bits(cand):
            assign[d] = v
            if rec(d + 1, used | 1 << v):
                return True
        return False

    if p.size > g.order or not rec(0, 0):
        return None
    out = [0] * p.size
    for d, r in enumerate(order):
        out[r] = assign[d]
    return out


def find_induced(g: Graph, kind: ConfigKind, n: int, budget: Budget | int | None = None,
                 complemented: bool = False) -> Witness | None:
    """An induced copy of ``kind`` at height ``n`` (in the complement if asked), or None if absent.

    Raises BudgetExhausted when the budget runs out first; ``None`` is only
    returned after an exhaustive search.
    """
    if n < MIN_HEIGHT[kind]:
        raise InputError(f"{kind.value} needs height >= {MIN_HEIGHT[kind]}")
    budget = as_budget(budget)
    h = complement(g) if complemented else g
    if kind is K.PrimeChain:
        seq = _find_prime_chain(h, n, budget)
        if seq is None:
            return None
        return Witness(kind, n, chain_roles(seq), complemented)
    p = pattern(kind, n)
    found = _search_pattern(h, p, budget)
    if found is None:
        return None
    return Witness(kind, n, tuple(zip(p.roles, found)), complemented)


def _find_prime_chain(g: Graph, n: int, budget: Budget) -> list[int] | None:
    if n + 1 > g.order:
        return None
    full = g.full_mask
    seen: set[tuple[int, int]] = set()

    def rec(seq: list[int], placed: int) -> list[int] | None:
        if len(seq) == n + 1:
            budget.tick()
            return seq if is_prime(induced_subgraph(g, seq)[0]).prime else None
        key = (placed, seq[-1])
        if key in seen:
            return None
        seen.add(key)
        budget.tick()
        for w in bits(_extensions(g, placed, seq[-1], full)):
            seq.append(w)
            if rec(seq, placed | 1 << w) is not None:
                return seq
            seq.pop()
        return None

    for x in range(g.order):
        for y in range(g.order):
            if x != y and (r := rec([x, y], 1 << x | 1 << y)) is not None:
                return list(r)
    return None


def max_height(g: Graph, kind: ConfigKind, cap: int, budget: Budget | int | None = None,
               complemented: bool = False) -> int:
    """Largest n <= cap with an induced copy; 0 if none.

    Copies at height n contain copies at every smaller height, so the search
    climbs until the first failure. On budget exhaustion the raised error
    carries the height certified so far.
    """
    if cap < 1:
        raise InputError("cap must be >= 1")
    budget = as_budget(budget)
    best = 0
    for n in range(MIN_HEIGHT[kind], cap + 1):
        try:
            w = find_induced(g, kind, n, budget, complemented)
        except BudgetExhausted as exc:
            raise BudgetExhausted(str(exc), lower_bound=best) from None
        if w is None:
            break
        best = n
    return best


def ladder_index(g: Graph, cap: int, budget: Budget | int | None = None) -> int:
    """Largest k <= cap such that g contains a half-graph pattern of height k."""
    return max_height(g, K.HalfGraphPattern, cap, budget)


def is_edge_stable(g: Graph, k: int, budget: Budget | int | None = None) -> bool:
    """True iff g omits every half-graph pattern of height k."""
    return ladder_index(g, k, budget) < k


def detection_plan(n: int) -> Iterator[tuple[ConfigKind, bool]]:
    """(kind, complemented) pairs in the order ``detect_any`` tries them."""
    for kind in THEOREM_FAMILIES:
        if n < MIN_HEIGHT[kind]:
            continue
        yield kind, False
        # chains and primality are both invariant under complementation
        if kind is not K.PrimeChain:
            yield kind, True


def detect_any(g: Graph, n: int, budget: Budget | int | None = None) -> Witness | None:
    if n < 2:
        raise InputError("detect_any needs n >= 2")
    budget = as_budget(budget)
    for kind, comp in detection_plan(n):
        w = find_induced(g, kind, n, budget, comp)
        if w is not None:
            return w
    return None
