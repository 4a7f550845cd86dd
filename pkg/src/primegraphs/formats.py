"""Reading and writing graphs: graph6, the "p n m" adjacency list, and DOT."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from pathlib import Path

from .errors import InputError, ParseError
from .graph import Graph, bits

GRAPH6_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n < 1 << 36:
        return chr(126) * 2 + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise InputError("graph6 cannot encode more than 2**36 - 1 vertices")


def emit_graph6(g: Graph) -> str:
    out = [_encode_order(g.order)]
    acc = 0
    nbits = 0
    for j in range(1, g.order):
        row = g.rows[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="surrogateescape")
    text = text.rstrip("\r\n")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    for k, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", base + k)
    if not text:
        raise ParseError("empty graph6 string", base)

    def field(start: int, count: int) -> int:
        if len(text) < start + count:
            raise ParseError("truncated length header", base + len(text))
        v = 0
        for k in range(start, start + count):
            v = v << 6 | (ord(text[k]) - 63)
        return v

    if ord(text[0]) != 126:
        n, pos = ord(text[0]) - 63, 1
    elif len(text) > 1 and ord(text[1]) == 126:
        n, pos = field(2, 6), 8
    else:
        n, pos = field(1, 3), 4

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[pos:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for {n} vertices, found {len(body)}", base + pos)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need:
        pad = 6 * need - nbits
        if (ord(body[-1]) - 63) & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits", base + pos + need - 1)
    return Graph(n, rows)


def emit_adjlist(g: Graph) -> str:
    es = g.edges()
    lines = [f"p {g.order} {len(es)}"]
    lines.extend(f"{u} {v}" for u, v in es)
    return "\n".join(lines) + "\n"


def parse_adjlist(text: str) -> Graph:
    """``p <order> <edges>`` header, then ``u v`` per line; ``c``/``#`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p" or len(parts) != 3:
                raise InputError(f"line {lineno}: expected header 'p <order> <edges>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise InputError(f"line {lineno}: non-integer header field") from None
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex") from None
    if header is None:
        raise InputError("missing 'p <order> <edges>' header")
    order, m = header
    if len(edges) != m:
        raise InputError(f"header promises {m} edges, found {len(edges)}")
    g = Graph.from_edges(order, edges)
    if g.size != m:
        raise InputError("duplicate edges in adjacency list")
    return g


def looks_like_adjlist(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if s and s[0] not in "c#":
            return s.split()[0] == "p"
    return False


def read_graphs(source: str | Path) -> list[Graph]:
    """All graphs in a file: one graph6 string per line, or a single adjacency list."""
    text = Path(source).read_text()
    if looks_like_adjlist(text):
        return [parse_adjlist(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Exception]]:
    """Parse line by line, yielding the exception instead of raising on bad lines."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except InputError as exc:
            yield lineno, exc


def to_dot(g: Graph, name: str = "G", highlight: Iterable[int] = ()) -> str:
    hl = set(highlight)
    out = [f"graph {name} {{"]
    for v in range(g.order):
        attr = ' [style=filled, fillcolor="lightblue"]' if v in hl else ""
        out.append(f"  {v}{attr};")
    for u in range(g.order):
        for v in bits(g.rows[u] >> (u + 1) << (u + 1)):
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
