"""Type trees: binary-addressed arrangements of vertices.

Addresses are strings over ``"01"``; ``""`` is the root. A vertex at an
address below ``eta + "1"`` is adjacent to the vertex at ``eta``, one below
``eta + "0"`` is not (path consistency). This is the property the staged
construction in :func:`arrange_full` delivers and what the extraction
arguments use.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .configs import ConfigKind, Witness, verify_witness
from .errors import Budget, BudgetExhausted, InputError, InvariantViolation, Refusal, as_budget
from .graph import Graph, bits, is_complete, is_independent


@dataclass(frozen=True)
class TypeTree:
    host: Graph
    nodes: tuple[tuple[str, int], ...]  # (address, vertex), sorted by (len, address)

    @classmethod
    def from_mapping(cls, host: Graph, mapping: dict[str, int]) -> TypeTree:
        return cls(host, tuple(sorted(mapping.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    @cached_property
    def mapping(self) -> dict[str, int]:
        return dict(self.nodes)

    def __contains__(self, addr: str) -> bool:
        return addr in self.mapping

    def __len__(self) -> int:
        return len(self.nodes)

    def vertex(self, addr: str) -> int:
        try:
            return self.mapping[addr]
        except KeyError:
            raise InputError(f"address {addr!r} not in tree") from None

    def children(self, addr: str) -> list[str]:
        return [addr + b for b in "01" if addr + b in self.mapping]

    def leaves(self) -> list[str]:
        return [a for a, _ in self.nodes if not self.children(a)]

    @property
    def is_total(self) -> bool:
        return len(self.nodes) == self.host.order

    def violations(self) -> list[str]:
        """Every failed invariant, as human-readable strings (empty when valid)."""
        out = []
        m = self.mapping
        seen: dict[int, str] = {}
        for addr, v in self.nodes:
            if set(addr) - {"0", "1"}:
                out.append(f"bad address {addr!r}")
                continue
            if not 0 <= v < self.host.order:
                out.append(f"{addr!r}: vertex {v} out of range")
                continue
            if v in seen:
                out.append(f"vertex {v} at both {seen[v]!r} and {addr!r}")
            seen[v] = addr
            if len(addr) >= max(self.host.order, 1):
                out.append(f"{addr!r}: address longer than order - 1")
            if addr and addr[:-1] not in m:
                out.append(f"{addr!r}: parent missing")
            for k in range(len(addr)):
                anc = addr[:k]
                if anc not in m or not 0 <= m[anc] < self.host.order:
                    continue
                want = addr[k] == "1"
                if self.host.adjacent(v, m[anc]) != want:
                    out.append(f"{addr!r}: adjacency to ancestor {anc!r} should be {want}")
        return out

    def check(self) -> None:
        bad = self.violations()
        if bad:
            raise InvariantViolation("; ".join(bad[:5]))

    def to_json(self) -> dict:
        return {"nodes": [{"addr": a, "vertex": v} for a, v in self.nodes]}

    @classmethod
    def from_json(cls, host: Graph, data: dict) -> TypeTree:
        return cls.from_mapping(host, {d["addr"]: int(d["vertex"]) for d in data["nodes"]})

    def to_dot(self, name: str = "T") -> str:
        out = [f"digraph {name} {{", "  node [shape=circle];"]
        for a, v in self.nodes:
            label = a or "<>"
            out.append(f'  "{label}" [label="{v}\\n{label}"];')
        for a, _ in self.nodes:
            for c in self.children(a):
                out.append(f'  "{a or "<>"}" -> "{c}" [label="{c[-1]}"];')
        out.append("}")
        return "\n".join(out) + "\n"


# -- construction ---------------------------------------------------------------


def arrange_full(g: Graph, policy: str = "min", seed: int | None = None) -> TypeTree:
    """Arrange every vertex into a type tree, stage by stage.

    Each pending slot ``eta`` owns a candidate set; one member becomes
    ``a_eta`` and the rest splits into its neighbours (slot ``eta+"1"``)
    and non-neighbours (slot ``eta+"0"``). ``policy`` picks the member:
    ``"min"`` (lowest index) or ``"random"`` (seeded).
    """
    if g.order < 1:
        raise InputError("cannot arrange the empty graph")
    if policy not in ("min", "random"):
        raise InputError(f"unknown selection policy {policy!r}")
    rng = random.Random(seed)
    mapping: dict[str, int] = {}
    level = [("", g.full_mask)]
    while level:
        nxt = []
        for addr, cand in level:
            if policy == "min":
                v = (cand & -cand).bit_length() - 1
            else:
                v = rng.choice(list(bits(cand)))
            mapping[addr] = v
            rest = cand & ~(1 << v)
            for b, part in (("0", rest & ~g.rows[v]), ("1", rest & g.rows[v])):
                if part:
                    nxt.append((addr + b, part))
        level = nxt
    return TypeTree.from_mapping(g, mapping)


def longest_branch(t: TypeTree) -> list[str]:
    """Root-to-leaf address chain of maximum length; ties go to the lexicographically least."""
    if not t.nodes:
        raise InputError("empty tree")
    leaf = min(t.leaves(), key=lambda a: (-len(a), a))
    return [leaf[:k] for k in range(len(leaf) + 1)]


def _rank_table(t: TypeTree) -> dict[str, int]:
    """element_rank for every node, bottom-up.

    ``pair[u]`` is the best min(rank(w0), rank(w1)) over incomparable strict
    descendants w0, w1 of u; such pairs either straddle u's two children or
    sit inside one child's subtree.
    """
    rank: dict[str, int] = {}
    pair: dict[str, int] = {}
    for addr, _ in sorted(t.nodes, key=lambda kv: -len(kv[0])):
        kids = t.children(addr)
        best = max((pair[c] for c in kids), default=0)
        if len(kids) == 2:
            best = max(best, min(rank[kids[0]], rank[kids[1]]))
        pair[addr] = best
        rank[addr] = 1 + best
    return rank


def element_rank(t: TypeTree, addr: str) -> int:
    """Largest k such that the full binary tree of height k order-embeds below ``addr``."""
    if addr not in t:
        raise InputError(f"address {addr!r} not in tree")
    return _rank_table(t)[addr]


def max_element_rank(t: TypeTree) -> int:
    return max(_rank_table(t).values())


# -- tree rank ------------------------------------------------------------------


def full_addresses(t: int) -> list[str]:
    """All addresses of length < t, i.e. the full binary tree of height t."""
    out = [""]
    for k in range(1, t):
        out.extend(format(i, f"0{k}b") for i in range(1 << k))
    return out


class RankResult(NamedTuple):
    rank: int
    tree: TypeTree | None
    exact: bool


def _full_tree_search(g: Graph, budget: Budget):
    memo: dict[tuple[int, int], int] = {}  # (height, candidates) -> root, or -1

    def root_for(h: int, cand: int) -> int:
        if h == 1:
            return (cand & -cand).bit_length() - 1 if cand else -1
        key = (h, cand)
        if key in memo:
            return memo[key]
        budget.tick()
        found = -1
        if cand.bit_count() >= (1 << h) - 1:
            for v in bits(cand):
                rest = cand & ~(1 << v)
                if root_for(h - 1, rest & g.rows[v]) >= 0 and root_for(h - 1, rest & ~g.rows[v]) >= 0:
                    found = v
                    break
        memo[key] = found
        return found

    def build(h: int, cand: int, addr: str, out: dict[str, int]) -> None:
        v = root_for(h, cand)
        out[addr] = v
        if h > 1:
            rest = cand & ~(1 << v)
            build(h - 1, rest & ~g.rows[v], addr + "0", out)
            build(h - 1, rest & g.rows[v], addr + "1", out)

    return root_for, build


def tree_rank_witness(g: Graph, cap: int | None = None, budget: Budget | int | None = None) -> RankResult:
    """Largest t (<= cap) with a vertex subset arranged as a type tree on exactly 2^{<t}.

    Exact when the budget suffices; otherwise the best height found so far
    is returned with ``exact=False``.
    """
    if g.order == 0:
        return RankResult(0, None, True)
    cap = g.order if cap is None else cap
    if cap < 1:
        raise InputError("cap must be >= 1")
    budget = as_budget(budget)
    root_for, build = _full_tree_search(g, budget)
    best, witness = 0, None
    for h in range(1, cap + 1):
        try:
            if root_for(h, g.full_mask) < 0:
                return RankResult(best, witness, True)
            out: dict[str, int] = {}
            build(h, g.full_mask, "", out)
        except BudgetExhausted:
            return RankResult(best, witness, False)
        best, witness = h, TypeTree.from_mapping(g, out)
    return RankResult(best, witness, True)


def tree_rank(g: Graph) -> int:
    return tree_rank_witness(g).rank


EXACT_HEIGHT_LIMIT = 8


def tree_height_exact(g: Graph, limit: int = EXACT_HEIGHT_LIMIT) -> int:
    """Minimum, over all full arrangements, of the longest branch.

    With path consistency a full arrangement is fixed by its choice of root
    in every slot, and the two child slots receive exactly the neighbours and
    non-neighbours, so the minimum is a recursion over vertex subsets.
    """
    if g.order > limit:
        raise Refusal(f"exact tree height is limited to order <= {limit}")
    if g.order == 0:
        return 0
    memo: dict[int, int] = {0: 0}

    def height(cand: int) -> int:
        if cand in memo:
            return memo[cand]
        best = g.order + 1
        for v in bits(cand):
            rest = cand & ~(1 << v)
            best = min(best, 1 + max(height(rest & g.rows[v]), height(rest & ~g.rows[v])))
        memo[cand] = best
        return best

    return height(g.full_mask)


# -- statistics and extraction -----------------------------------------------------


@dataclass(frozen=True)
class RankHeightReport:
    order: int
    max_element_rank: int
    longest_branch: int

    @property
    def bound(self) -> int:
        t, h = self.max_element_rank, self.longest_branch
        return t * (2 * h) ** (t + 1)

    @property
    def holds(self) -> bool:
        return self.order <= self.bound

    def height_lower_bound(self) -> float:
        """((n/t)^(1/(t+1)))/2, which the longest branch must reach."""
        t = self.max_element_rank
        return (self.order / t) ** (1 / (t + 1)) / 2


def verify_rank_height(g: Graph, tree: TypeTree) -> RankHeightReport:
    if tree.host is not g and tree.host != g:
        raise InputError("tree belongs to a different graph")
    if not tree.is_total:
        raise InputError("tree must arrange every vertex")
    r = RankHeightReport(g.order, max_element_rank(tree), len(longest_branch(tree)))
    if not r.holds:
        raise InvariantViolation(
            f"n={r.order} exceeds t(2h)^(t+1)={r.bound} with t={r.max_element_rank}, h={r.longest_branch}")
    return r


@dataclass(frozen=True)
class HomogeneousResult:
    vertices: frozenset[int]
    complete: bool
    report: RankHeightReport
    rank_found: int
    rank_exact: bool

    @property
    def flag(self) -> str:
        return "complete" if self.complete else "independent"


def extract_homogeneous(g: Graph, seed: int | None = None, budget: Budget | int | None = None) -> HomogeneousResult:
    """The larger of two homogeneous sets.

    One is the all-0 spine of a full binary witness (independent, size =
    rank found). The other comes from the longest branch J of a full
    arrangement: along J, adjacency to the last vertex decides adjacency
    between every earlier pair, so the last vertex with its neighbours in J is
    complete and the rest of J (with it) independent; the larger half wins.
    """
    if g.order < 1:
        raise InputError("need at least one vertex")
    rank = tree_rank_witness(g, budget=budget)
    spine = frozenset(rank.tree.vertex("0" * k) for k in range(rank.rank)) if rank.tree else frozenset()

    tree = arrange_full(g, "min" if seed is None else "random", seed)
    report = verify_rank_height(g, tree)
    branch = [tree.vertex(a) for a in longest_branch(tree)]
    last = branch[-1]
    nbr = frozenset(v for v in branch if g.adjacent(last, v))
    if len(nbr) + 1 >= len(branch) - len(nbr):
        from_branch, complete = nbr | {last}, True
    else:
        from_branch, complete = frozenset(branch) - nbr, False

    if len(spine) > len(from_branch):
        chosen, complete = spine, False
    else:
        chosen = from_branch
    ok = is_complete(g, chosen) if complete else is_independent(g, chosen)
    if not ok:
        raise InvariantViolation("extracted set is not homogeneous")
    return HomogeneousResult(chosen, complete, report, rank.rank, rank.exact)


def homogeneous_lower_bound(n: int, t: int) -> float:
    """((n/t)^(1/(t+1)))/4: the guaranteed homogeneous-set size for order n and tree rank t."""
    return (n / t) ** (1 / (t + 1)) / 4


# -- spine pairs and configuration extraction --------------------------------------


@dataclass(frozen=True)
class SpinePairs:
    x: tuple[int, ...]
    y: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.x)

    def violations(self, g: Graph) -> list[str]:
        out = []
        if not is_independent(g, self.x):
            out.append("x not independent")
        for i, (a, b) in enumerate(zip(self.x, self.y)):
            if not g.adjacent(a, b):
                out.append(f"x{i + 1} not adjacent to y{i + 1}")
            for j in range(i + 1, len(self.y)):
                if g.adjacent(a, self.y[j]):
                    out.append(f"x{i + 1} adjacent to y{j + 1}")
        return out


def comb_length(tree: TypeTree) -> int:
    """Largest t such that 0^(i-1) and 0^(i-1)1 are addresses for every i <= t."""
    t = 0
    while "0" * t in tree and "0" * t + "1" in tree:
        t += 1
    return t


def spine_pairs(tree: TypeTree, t: int | None = None) -> SpinePairs:
    """x_i = vertex at 0^(i-1), y_i = vertex at 0^(i-1)1, for i = 1..t."""
    avail = comb_length(tree)
    t = avail if t is None else t
    if t > avail:
        raise InputError(f"tree carries only {avail} spine pairs, {t} requested")
    sp = SpinePairs(tuple(tree.vertex("0" * i) for i in range(t)),
                    tuple(tree.vertex("0" * i + "1") for i in range(t)))
    bad = sp.violations(tree.host)
    if bad:
        raise InvariantViolation("; ".join(bad))
    return sp


PairColoring = Callable[[int, int], tuple[int, int]]

# colour (a, b) -> (size index in (n1, n, n, n2), kind)
_OUTCOME = {
    (0, 0): (0, ConfigKind.InducedMatching),
    (0, 1): (1, ConfigKind.ThinSpider),
    (1, 0): (2, ConfigKind.BipartiteHalfGraph),
    (1, 1): (3, ConfigKind.HalfSplitGraph),
}
COLOURS = ((0, 0), (0, 1), (1, 0), (1, 1))


def spine_coloring(g: Graph, sp: SpinePairs) -> dict[tuple[int, int], int]:
    """Colour index of each pair i<j (0-based): a = [x_j ~ y_i], b = [y_i ~ y_j]."""
    out = {}
    for i in range(len(sp)):
        for j in range(i + 1, len(sp)):
            a = int(g.adjacent(sp.x[j], sp.y[i]))
            b = int(g.adjacent(sp.y[i], sp.y[j]))
            out[(i, j)] = COLOURS.index((a, b))
    return out


def _witness_from_indices(sp: SpinePairs, colour: tuple[int, int], idx: list[int]) -> Witness:
    size_index, kind = _OUTCOME[colour]
    xs = [sp.x[i] for i in idx]
    ys = [sp.y[i] for i in idx]
    if colour == (1, 0):
        # x_j ~ y_i iff i <= j: the y's play a, the x's play b
        a, b = ys, xs
    elif colour == (1, 1):
        # reversed so that a_i ~ b_j iff i <= j
        a, b = xs[::-1], ys[::-1]
    else:
        a, b = xs, ys
    k = len(idx)
    roles = tuple((f"a{i + 1}", v) for i, v in enumerate(a)) + tuple((f"b{i + 1}", v) for i, v in enumerate(b))
    return Witness(kind, k, roles)


def extract_config_from_tree(tree: TypeTree, n: int, n1: int, n2: int,
                             require_threshold: bool = True) -> Witness | None:
    """Colour the spine pairs and read a configuration off a monochromatic index set.

    With ``require_threshold`` the spine must be at least the exactly-known
    Ramsey number R(n1, n, n, n2); otherwise the call refuses. Without it the
    monochromatic search still runs exhaustively and ``None`` means no colour
    class is large enough.
    """
    from .ramsey import find_mono_clique, ramsey_exact

    if min(n, n1, n2) < 1:
        raise InputError("sizes must be >= 1")
    sizes = (n1, n, n, n2)
    sp = spine_pairs(tree)
    t = len(sp)
    threshold = ramsey_exact(sizes)
    if require_threshold:
        if threshold is None:
            raise Refusal(f"R{sizes} is not known exactly")
        if t < threshold:
            raise InputError(f"spine has {t} pairs, below R{sizes} = {threshold}")
    colouring = spine_coloring(tree.host, sp)
    hit = find_mono_clique(t, lambda i, j: colouring[(i, j)], sizes)
    if hit is None:
        if threshold is not None and t >= threshold:
            raise InvariantViolation(f"no monochromatic set although t={t} >= R{sizes}")
        return None
    colour, idx = hit
    w = _witness_from_indices(sp, COLOURS[colour], sorted(idx))
    if not verify_witness(tree.host, w):
        raise InvariantViolation(f"extracted {w.describe()} does not verify")
    return w


def build_tree_graph(t: int, pair_coloring: PairColoring) -> tuple[Graph, TypeTree]:
    """A graph carrying a full type tree with t spine pairs and a prescribed spine colouring.

    Vertices are the addresses of length <= t (2^(t+1) - 1 of them, so that
    y_t = 0^(t-1)1 exists). Comparable pairs follow path consistency; for
    spine indices i < j (1-based), x_j ~ y_i and y_i ~ y_j follow
    ``pair_coloring(i, j) = (a, b)``; every other pair is non-adjacent.
    """
    if t < 1:
        raise InputError("t must be >= 1")
    addrs = full_addresses(t + 1)
    index = {a: i for i, a in enumerate(addrs)}
    edges = []
    for a in addrs:
        for k in range(len(a)):
            if a[k] == "1":
                edges.append((index[a], index[a[:k]]))
    x = ["0" * i for i in range(t)]
    y = ["0" * i + "1" for i in range(t)]
    for i in range(t):
        for j in range(i + 1, t):
            a, b = pair_coloring(i + 1, j + 1)
            if a:
                edges.append((index[x[j]], index[y[i]]))
            if b:
                edges.append((index[y[i]], index[y[j]]))
    g = Graph.from_edges(len(addrs), edges)
    tree = TypeTree.from_mapping(g, index)
    tree.check()
    return g, tree


def all_one_spine(tree: TypeTree) -> list[int]:
    """Vertices at <>, 1, 11, ...: pairwise adjacent under path consistency."""
    out, a = [], ""
    while a in tree:
        out.append(tree.vertex(a))
        a += "1"
    return out
