"""Immutable simple graphs on vertices ``0..n-1`` plus distance and
shortest-path primitives.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InputError, ValidityError

INFINITE = math.inf

Edge = tuple[int, int]
Path = tuple[int, ...]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``range(n)``.

    ``edges`` holds each edge once as a pair ``(u, v)`` with ``u < v``.
    Build instances with :meth:`from_edges`, which validates and normalizes.
    """

    n: int
    edges: frozenset[Edge]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _mask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"negative vertex count {self.n}")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"bad edge ({u}, {v}) for n={self.n}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(
            self, "_mask", tuple(sum(1 << w for w in a) for a in adj)
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def neighbor_mask(self, v: int) -> int:
        """Open neighborhood of ``v`` as a bitmask."""
        return self._mask[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} out of range for n={self.n}")


# -- small named graphs, handy for tests and examples ------------------------

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and leaves ``1..leaves``."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- connectivity and distances ----------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_order(g: Graph, source: int = 0) -> list[int]:
    """Vertices reachable from ``source`` in BFS order, smaller labels first."""
    seen = [False] * g.n
    seen[source] = True
    order = [source]
    i = 0
    while i < len(order):
        for w in sorted(g.neighbors(order[i])):
            if not seen[w]:
                seen[w] = True
                order.append(w)
        i += 1
    return order


def search_order(g: Graph) -> list[int]:
    """Maximum-cardinality order for backtracking searches.

    Starts at a vertex of maximum degree (smallest label on ties); each next
    vertex has the most neighbors already placed, then the highest degree,
    then the smallest label. On a connected graph every vertex after the
    first has an earlier neighbor.
    """
    if g.n == 0:
        return []
    placed = [False] * g.n
    weight = [0] * g.n
    order: list[int] = []
    for _ in range(g.n):
        v = max(
            (w for w in range(g.n) if not placed[w]),
            key=lambda w: (weight[w], g.degree(w), -w),
        )
        placed[v] = True
        order.append(v)
        for w in g.neighbors(v):
            weight[w] += 1
    return order


def all_distances(g: Graph) -> list[list[int]]:
    """All-pairs distance matrix (-1 marks unreachable pairs)."""
    return [bfs_distances(g, s) for s in range(g.n)]


def connected_components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out: list[list[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        members = bfs_order(g, s)
        for v in members:
            comp[v] = len(out)
        out.append(sorted(members))
    return out


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return len(bfs_order(g, 0)) == g.n


def distance(g: Graph, u: int, v: int) -> int | float:
    """Graph distance, or :data:`INFINITE` when ``u`` and ``v`` are disconnected."""
    g.check_vertex(u)
    g.check_vertex(v)
    d = bfs_distances(g, u)[v]
    return INFINITE if d < 0 else d


class ShortestPaths(NamedTuple):
    paths: list[Path]
    overflow: bool


def enumerate_shortest_paths(g: Graph, u: int, v: int, cap: int) -> ShortestPaths:
    """All shortest ``u``-``v`` paths in lexicographic order, at most ``cap``.

    Walks the BFS layer DAG between the endpoints depth-first. ``overflow``
    is set when more than ``cap`` shortest paths exist.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InputError("shortest paths need distinct endpoints")
    if cap < 1:
        raise InputError(f"cap must be positive, got {cap}")
    du = bfs_distances(g, u)
    if du[v] < 0:
        raise ValidityError(f"vertices {u} and {v} are disconnected")
    dv = bfs_distances(g, v)
    d = du[v]

    paths: list[Path] = []
    stack: list[int] = [u]

    # Returns True once cap+1 paths have been seen.
    def walk(x: int) -> bool:
        if x == v:
            if len(paths) == cap:
                return True
            paths.append(tuple(stack))
            return False
        for w in sorted(g.neighbors(x)):
            if du[w] == du[x] + 1 and dv[w] == d - du[w]:
                stack.append(w)
                if walk(w):
                    return True
                stack.pop()
        return False

    overflow = walk(u)
    return ShortestPaths(paths, overflow)


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the surviving vertices, relabeled compactly.

    The returned map sends each surviving old label to its new label and
    preserves order.
    """
    gone = set(removed)
    for v in gone:
        g.check_vertex(v)
    relabel: dict[int, int] = {}
    for v in range(g.n):
        if v not in gone:
            relabel[v] = len(relabel)
    edges = [
        (relabel[a], relabel[b])
        for a, b in g.edges
        if a in relabel and b in relabel
    ]
    return Graph.from_edges(len(relabel), edges), relabel


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(keep)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])
