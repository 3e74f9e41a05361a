"""Instance files: edge-list text and graph6.

Edge-list format::

    # comments and blank lines are ignored
    <n> <m>
    <u> <v>          (m lines, 0-indexed)
    X: <v1> <v2> ... (optional twin-cover annotation)
    k: <int>         (optional color target)

In graph6 mode the first line is a graph6 string and the optional ``X:``
and ``k:`` lines may follow it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Instance:
    g: Graph
    x: frozenset[int] | None = None
    k: int | None = None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _parse_annotations(lines: list[tuple[int, str]], n: int) -> tuple[frozenset[int] | None, int | None]:
    x = k = None
    for lineno, line in lines:
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("X", "k"):
            raise ParseError(f"unexpected line {line!r}", lineno)
        if key == "X":
            if x is not None:
                raise ParseError("repeated X annotation", lineno)
            verts = [_int(t, lineno) for t in rest.split()]
            for v in verts:
                if not 0 <= v < n:
                    raise ParseError(f"annotation vertex {v} out of range", lineno)
            if len(set(verts)) != len(verts):
                raise ParseError("annotation vertices must be distinct", lineno)
            x = frozenset(verts)
        else:
            if k is not None:
                raise ParseError("repeated k annotation", lineno)
            toks = rest.split()
            if len(toks) != 1:
                raise ParseError("k line needs exactly one integer", lineno)
            k = _int(toks[0], lineno)
            if k < 1:
                raise ParseError(f"k must be positive, got {k}", lineno)
    return x, k


def parse_edgelist(text: str) -> Instance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    toks = header.split()
    if len(toks) != 2:
        raise ParseError("header must be '<n> <m>'", lineno)
    n, m = (_int(t, lineno) for t in toks)
    if n < 1:
        raise ParseError("graph must have at least one vertex", lineno)
    if m < 0:
        raise ParseError("negative edge count", lineno)
    if len(lines) < 1 + m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines[1:1 + m]:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"edge line must be '<u> <v>', got {line!r}", lineno)
        u, v = (_int(t, lineno) for t in toks)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
    x, k = _parse_annotations(lines[1 + m:], n)
    return Instance(Graph(n, frozenset(seen)), x, k)


def format_edgelist(inst: Instance) -> str:
    g = inst.g
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edge_list())
    if inst.x is not None:
        out.append("X:" + "".join(f" {v}" for v in sorted(inst.x)))
    if inst.k is not None:
        out.append(f"k: {inst.k}")
    return "\n".join(out) + "\n"


# -- graph6 -------------------------------------------------------------------

def decode_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(not 0 <= d < 64 for d in data):
        raise ParseError(f"invalid graph6 string {s!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        raise ParseError(f"truncated graph6 size field in {s!r}")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has wrong length for n={n}")
    bits = [(d >> (5 - i)) & 1 for d in rest for i in range(6)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(d + 63) for d in head + body)


def parse_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-blank line."""
    graphs = []
    for lineno, line in _content_lines(text):
        try:
            graphs.append(decode_graph6(line))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return graphs


def parse_graph6_instance(text: str) -> Instance:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    lineno, first = lines[0]
    try:
        g = decode_graph6(first)
    except ParseError as exc:
        raise ParseError(str(exc), lineno) from None
    if g.n < 1:
        raise ParseError("graph must have at least one vertex", lineno)
    x, k = _parse_annotations(lines[1:], g.n)
    return Instance(g, x, k)


def parse_instance(text: str, fmt: str = "edgelist") -> Instance:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        return parse_graph6_instance(text)
    raise ParseError(f"unknown format {fmt!r}")
