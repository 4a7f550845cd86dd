"""Immutable simple graphs on vertices ``0..order-1``.

Adjacency is a tuple of Python ints used as bitsets: bit ``v`` of ``rows[u]``
is set iff ``u`` and ``v`` are adjacent. Every search in the package works on
these masks directly.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from itertools import combinations

from .errors import InputError

VertexMap = tuple[int, ...]
"""``vmap[i]`` is the host vertex that pattern/subgraph vertex ``i`` maps to."""


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows: Sequence[int]):
        if order < 0:
            raise InputError("order must be nonnegative")
        if len(rows) != order:
            raise InputError("need one adjacency row per vertex")
        full = (1 << order) - 1
        rows = tuple(rows)
        for u, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"row {u} mentions a vertex outside 0..{order - 1}")
            if row >> u & 1:
                raise InputError(f"self-loop at {u}")
            for v in bits(row):
                if not rows[v] >> u & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")
        self.order = order
        self.rows = rows
        self._hash = None

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InputError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows)

    # -- basic queries ---------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        return self.rows[v]

    def non_neighbors(self, v: int) -> int:
        """Mask of vertices other than ``v`` that are not adjacent to ``v``."""
        return self.full_mask & ~self.rows[v] & ~(1 << v)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return len(self.edges())

    def check_vertices(self, vertices: Iterable[int]) -> list[int]:
        vs = list(vertices)
        for v in vs:
            if not isinstance(v, int) or not 0 <= v < self.order:
                raise InputError(f"vertex {v!r} not in 0..{self.order - 1}")
        return vs

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.order == other.order and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


# -- operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, [full & ~row & ~(1 << u) for u, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, VertexMap]:
    """Restrict ``g`` to ``s``; new vertex ``i`` is host vertex ``vmap[i]`` (ascending)."""
    vmap = tuple(sorted(set(g.check_vertices(s))))
    index = {v: i for i, v in enumerate(vmap)}
    rows = []
    for v in vmap:
        rows.append(mask_of(index[w] for w in bits(g.rows[v]) if w in index))
    return Graph(len(vmap), rows), vmap


def _check_set(g: Graph, s: Iterable[int]) -> int:
    return mask_of(g.check_vertices(s))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = _check_set(g, s)
    return all(not g.rows[v] & m for v in bits(m))


def is_complete(g: Graph, s: Iterable[int]) -> bool:
    m = _check_set(g, s)
    return all((g.rows[v] | 1 << v) & m == m for v in bits(m))


def is_mixed(g: Graph, v: int, s: Iterable[int]) -> bool:
    m = _check_set(g, s)
    g.check_vertices([v])
    if m >> v & 1:
        raise InputError(f"vertex {v} lies in the set it is tested against")
    hit = g.rows[v] & m
    return hit != 0 and hit != m


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    return Graph.from_edges(
        len(es),
        ((i, j) for (i, e), (j, f) in combinations(enumerate(es), 2) if set(e) & set(f)),
    )


def subdivision(g: Graph, m: int) -> Graph:
    """Replace every edge by an induced path with ``m`` new internal vertices.

    New vertices are numbered after the originals, edge by edge in ``g.edges()`` order.
    """
    if m < 0:
        raise InputError("subdivision parameter must be >= 0")
    if m == 0:
        return g
    edges = []
    nxt = g.order
    for u, v in g.edges():
        path = [u, *range(nxt, nxt + m), v]
        nxt += m
        edges.extend(zip(path, path[1:]))
    return Graph.from_edges(nxt, edges)


# -- constructors ------------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, ((i, p + j) for i in range(p) for j in range(q)))


def star_graph(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return complete_bipartite(1, n)


def disjoint_union(*gs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in gs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.order
    return Graph.from_edges(offset, edges)


def random_graph(order: int, edge_probability: float | Fraction | str, seed: int) -> Graph:
    """G(n, p) with pairs sampled in lexicographic order from ``random.Random(seed)``."""
    p = Fraction(edge_probability)
    if not 0 <= p <= 1:
        raise InputError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u, v in combinations(range(order), 2):
        # exact comparison against the rational p; random() is k/2**53
        if Fraction(rng.random()) < p:
            edges.append((u, v))
    return Graph.from_edges(order, edges)
