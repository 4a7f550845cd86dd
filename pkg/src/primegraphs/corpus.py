"""Graph corpora: exhaustive small graphs, planted configurations, random graphs, files.

A corpus spec is a file path (graph6 lines or one adjacency list) or one of

    atlas:<max_order>              every graph up to isomorphism, orders 1..max_order (<= 7)
    atlas-connected:<order>        the connected ones of exactly that order
    planted:<lo>-<hi>              each main-theorem family at heights lo..hi, and its complement
    random:<count>:<max_order>:<seed>

Entries are yielded as :class:`Entry` records whose ``graph`` is None when the
source line could not be parsed.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .configs import THEOREM_FAMILIES, ConfigKind, build_config, min_height
from .errors import InputError
from .formats import iter_graph6_lines, looks_like_adjlist, parse_adjlist
from .graph import Graph, complement, random_graph

ATLAS_MAX_ORDER = 7


@dataclass(frozen=True)
class Entry:
    label: str
    graph: Graph | None
    expected: tuple[ConfigKind, int, bool] | None = None  # planted (kind, height, complemented)
    error: str | None = None


@lru_cache(maxsize=1)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    return tuple(Graph.from_edges(G.number_of_nodes(), G.edges()) for G in nx.graph_atlas_g())


def atlas_graphs(max_order: int = ATLAS_MAX_ORDER, min_order: int = 1) -> list[Graph]:
    """All graphs of the given orders, one per isomorphism class (networkx's graph atlas)."""
    if max_order > ATLAS_MAX_ORDER:
        raise InputError(f"the atlas stops at order {ATLAS_MAX_ORDER}")
    return [g for g in _atlas() if min_order <= g.order <= max_order]


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    seen, todo = 1, 1
    while todo:
        v = (todo & -todo).bit_length() - 1
        todo &= todo - 1
        new = g.rows[v] & ~seen
        seen |= new
        todo |= new
    return seen == g.full_mask


def planted_entries(lo: int, hi: int) -> list[Entry]:
    out = []
    for n in range(lo, hi + 1):
        for kind in THEOREM_FAMILIES:
            if n < min_height(kind):
                continue
            g = build_config(kind, n)
            out.append(Entry(f"{kind.value}:{n}", g, (kind, n, False)))
            if kind is not ConfigKind.PrimeChain:
                out.append(Entry(f"co-{kind.value}:{n}", complement(g), (kind, n, True)))
    return out


def random_entries(count: int, max_order: int, seed: int) -> list[Entry]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        order = rng.randint(1, max_order)
        p = Fraction(rng.randint(1, 9), 10)
        out.append(Entry(f"random:{i}:n={order}:p={p}", random_graph(order, p, seed=rng.randrange(1 << 30))))
    return out


def _ints(parts: list[str], spec: str) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(f"bad corpus spec {spec!r}") from None


def iter_corpus(spec: str) -> Iterator[Entry]:
    head, _, rest = spec.partition(":")
    if head == "atlas" and rest:
        (m,) = _ints([rest], spec)
        for i, g in enumerate(atlas_graphs(m)):
            yield Entry(f"atlas:{i}", g)
    elif head == "atlas-connected" and rest:
        (m,) = _ints([rest], spec)
        for i, g in enumerate(g for g in atlas_graphs(m, m) if is_connected(g)):
            yield Entry(f"atlas-connected:{m}:{i}", g)
    elif head == "planted" and rest:
        lo, _, hi = rest.partition("-")
        lo_i, hi_i = _ints([lo, hi or lo], spec)
        yield from planted_entries(lo_i, hi_i)
    elif head == "random" and rest:
        parts = rest.split(":")
        if len(parts) != 3:
            raise InputError("random corpus spec is random:<count>:<max_order>:<seed>")
        yield from random_entries(*_ints(parts, spec))
    else:
        path = Path(spec)
        if not path.exists():
            raise InputError(f"no such corpus file or spec: {spec!r}")
        text = path.read_text()
        if looks_like_adjlist(text):
            yield Entry(f"{path.name}", parse_adjlist(text))
            return
        for lineno, item in iter_graph6_lines(text.splitlines()):
            label = f"{path.name}:{lineno}"
            if isinstance(item, Exception):
                yield Entry(label, None, error=str(item))
            else:
                yield Entry(label, item)
