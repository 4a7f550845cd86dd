"""Modules, primality and chains.

A chain from a pair ``{v0, v1}`` grows one vertex at a time; the new vertex
must see the previous one as its unique neighbour or its unique non-neighbour
among everything already placed. Whether a chain can still be extended
depends only on the set of placed vertices and the last one, which is what
makes the breadth-first searches below memoisable.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import Budget, InputError, InvariantViolation, as_budget
from .graph import Graph, bits, induced_subgraph, mask_of


@dataclass(frozen=True)
class Chain:
    vertices: tuple[int, ...]

    @property
    def base(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def target(self) -> int:
        return self.vertices[-1]

    def to_json(self) -> dict:
        return {"base": list(self.base), "vertices": list(self.vertices), "length": self.length}

    @classmethod
    def from_json(cls, data: dict) -> Chain:
        c = cls(tuple(data["vertices"]))
        if list(c.base) != list(data["base"]) and set(c.base) != set(data["base"]):
            raise InputError("chain base does not match its first two vertices")
        return c


@dataclass(frozen=True)
class PrimalityReport:
    prime: bool
    counterexample: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.prime


def is_module(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(g.check_vertices(s))
    if m & (m - 1) == 0:  # empty or singleton
        return True
    for v in bits(g.full_mask & ~m):
        hit = g.rows[v] & m
        if hit and hit != m:
            return False
    return True


def _closure_mask(g: Graph, m: int) -> int:
    full = g.full_mask
    while True:
        for v in bits(full & ~m):
            hit = g.rows[v] & m
            if hit and hit != m:
                m |= 1 << v
                break
        else:
            return m


def module_closure(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """Smallest module containing ``s``: keep absorbing the lowest mixed vertex."""
    vs = set(g.check_vertices(s))
    if len(vs) < 2:
        raise InputError("module_closure needs at least two vertices")
    return frozenset(bits(_closure_mask(g, mask_of(vs))))


def is_prime(g: Graph) -> PrimalityReport:
    # order <= 2 has no subset that is neither empty, a singleton nor everything
    if g.order <= 2:
        return PrimalityReport(True)
    full = g.full_mask
    for u, v in combinations(range(g.order), 2):
        c = _closure_mask(g, 1 << u | 1 << v)
        if c != full:
            return PrimalityReport(False, frozenset(bits(c)))
    return PrimalityReport(True)


def _step_ok(g: Graph, placed: int, last: int, w: int) -> bool:
    """Is ``last`` the unique neighbour or unique non-neighbour of ``w`` in ``placed``?"""
    hit = g.rows[w] & placed
    return hit == 1 << last or placed & ~hit == 1 << last


def _extensions(g: Graph, placed: int, last: int, allowed: int) -> int:
    """Mask of vertices in ``allowed`` that may follow ``last``."""
    out = 0
    for w in bits(allowed & ~placed):
        if _step_ok(g, placed, last, w):
            out |= 1 << w
    return out


def is_chain(g: Graph, seq: Sequence[int], base: Iterable[int]) -> bool:
    seq = list(seq)
    try:
        g.check_vertices(seq)
        base_mask = mask_of(g.check_vertices(base))
    except InputError:
        return False
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    if not (base_mask >> seq[0] & 1 and base_mask >> seq[1] & 1):
        return False
    if any(base_mask >> v & 1 for v in seq[2:]):
        return False
    placed = 1 << seq[0]
    for i in range(1, len(seq)):
        if not _step_ok(g, placed, seq[i - 1], seq[i]):
            return False
        placed |= 1 << seq[i]
    return True


def _base_pair(g: Graph, base: Iterable[int]) -> tuple[int, int]:
    b = sorted(set(g.check_vertices(base)))
    if len(b) != 2:
        raise InputError("chain base must be a pair of distinct vertices")
    return b[0], b[1]


def chain_search(g: Graph, base: Iterable[int], max_len: int | None = None,
                 budget: Budget | int | None = None) -> dict[int, Chain]:
    """Shortest chain from ``base`` to every reachable target, by breadth-first search.

    States are (placed set, last vertex); each is expanded once, lowest vertex first.
    """
    x, y = _base_pair(g, base)
    budget = as_budget(budget)
    allowed = g.full_mask & ~(1 << x | 1 << y)
    limit = g.order - 1 if max_len is None else min(max_len, g.order - 1)
    found: dict[int, Chain] = {}
    frontier: dict[tuple[int, int], tuple[int, ...]] = {}
    for a, b in ((x, y), (y, x)):
        frontier.setdefault((1 << a | 1 << b, b), (a, b))
    length = 1
    while frontier and length < limit:
        length += 1
        nxt: dict[tuple[int, int], tuple[int, ...]] = {}
        for (placed, last), seq in frontier.items():
            budget.tick()
            for w in bits(_extensions(g, placed, last, allowed)):
                path = seq + (w,)
                if w not in found:
                    found[w] = Chain(path)
                nxt.setdefault((placed | 1 << w, w), path)
        frontier = nxt
    return found


def find_chain(g: Graph, base: Iterable[int], target: int, max_len: int | None = None,
               budget: Budget | int | None = None) -> Chain | None:
    x, y = _base_pair(g, base)
    g.check_vertices([target])
    if target in (x, y):
        raise InputError("target must lie outside the base pair")
    return chain_search(g, (x, y), max_len, budget).get(target)


def chain_radius(g: Graph, budget: Budget | int | None = None) -> int | None:
    """Least n such that every triple has a chain of length <= n; None if some triple has none."""
    if g.order < 3:
        raise InputError("chain_radius needs at least 3 vertices")
    budget = as_budget(budget)
    worst = 0
    for pair in combinations(range(g.order), 2):
        found = chain_search(g, pair, budget=budget)
        for z in range(g.order):
            if z in pair:
                continue
            if z not in found:
                return None
            worst = max(worst, found[z].length)
    return worst


def find_long_chain(g: Graph, length: int, budget: Budget | int | None = None) -> Chain | None:
    """Any chain of exactly ``length`` (from any base pair), depth-first.

    Initial segments of chains are chains, so this decides "some chain of length >= length".
    """
    if length < 2:
        raise InputError("chains have length >= 2")
    if length + 1 > g.order:
        return None
    budget = as_budget(budget)
    full = g.full_mask
    # base vertices are always placed, so (placed, last) determines every continuation
    dead: set[tuple[int, int]] = set()

    def extend(seq: list[int], placed: int) -> list[int] | None:
        if len(seq) == length + 1:
            return seq
        key = (placed, seq[-1])
        if key in dead:
            return None
        budget.tick()
        for w in bits(_extensions(g, placed, seq[-1], full)):
            seq.append(w)
            if extend(seq, placed | 1 << w) is not None:
                return seq
            seq.pop()
        dead.add(key)
        return None

    for x, y in permutations(range(g.order), 2):
        r = extend([x, y], 1 << x | 1 << y)
        if r is not None:
            return Chain(tuple(r))
    return None


def _induces_prime(g: Graph, vertices: Iterable[int]) -> bool:
    return is_prime(induced_subgraph(g, vertices)[0]).prime


def shrink_to_prime_chain(g: Graph, c: Chain | Sequence[int], budget: Budget | int | None = None) -> Chain:
    """A chain of length t-1 inside the vertices of a chain of length t > 3 that induces a prime graph.

    Tries order-preserving one-vertex deletions first, then every ordering of
    every t-subset of the chain's vertices.
    """
    seq = tuple(c.vertices if isinstance(c, Chain) else c)
    if not is_chain(g, seq, seq[:2]):
        raise InputError("input is not a chain")
    t = len(seq) - 1
    if t <= 3:
        raise InputError("shrinking needs a chain of length > 3")
    budget = as_budget(budget)
    for drop in range(len(seq)):
        sub = seq[:drop] + seq[drop + 1:]
        budget.tick()
        if is_chain(g, sub, sub[:2]) and _induces_prime(g, sub):
            return Chain(sub)
    for drop in range(len(seq)):
        rest = seq[:drop] + seq[drop + 1:]
        if not _induces_prime(g, rest):
            continue
        for perm in permutations(rest):
            budget.tick()
            if is_chain(g, perm, perm[:2]):
                return Chain(perm)
    raise InvariantViolation(f"no prime-inducing sub-chain of length {t - 1} in {seq}")
