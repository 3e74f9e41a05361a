"""True twins, twin covers and the twin-clique decomposition.

A twin cover is represented as a plain ``frozenset`` of vertices; its size
is the usual parameter ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetError, InputError, ValidityError
from .graph import Graph, connected_components, delete_vertices

CliqueType = tuple[frozenset[int], int]


@dataclass(frozen=True)
class TwinClique:
    """A connected component of ``G - X``.

    ``vertices`` is sorted; ``neighborhood`` is the common neighborhood of the
    members inside ``X``.
    """

    vertices: tuple[int, ...]
    neighborhood: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def type(self) -> CliqueType:
        return (self.neighborhood, len(self.vertices))

    @property
    def min_vertex(self) -> int:
        return self.vertices[0]


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` have equal closed neighborhoods."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InputError("true twins must be distinct vertices")
    return g.closed_neighborhood(u) == g.closed_neighborhood(v)


def _is_twin_edge(g: Graph, u: int, v: int) -> bool:
    return g.neighbor_mask(u) | (1 << u) == g.neighbor_mask(v) | (1 << v)


def twin_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in g.edge_list() if _is_twin_edge(g, u, v)]


def _first_bad_edge(g: Graph, x: frozenset[int]) -> tuple[int, int] | None:
    for u, v in g.edge_list():
        if u not in x and v not in x and not _is_twin_edge(g, u, v):
            return (u, v)
    return None


def _as_vertex_set(g: Graph, x: Iterable[int]) -> frozenset[int]:
    x = frozenset(x)
    for v in x:
        g.check_vertex(v)
    return x


def is_twin_cover(g: Graph, x: Iterable[int]) -> bool:
    """Whether every edge of ``g - x`` joins two true twins."""
    return _first_bad_edge(g, _as_vertex_set(g, x)) is None


def decompose_twin_cliques(g: Graph, x: Iterable[int]) -> list[TwinClique]:
    """Split ``V - X`` into twin-cliques, sorted by minimum vertex.

    The clique and uniform-neighborhood structure is checked rather than
    assumed; an invalid twin cover raises :class:`ValidityError`.
    """
    x = _as_vertex_set(g, x)
    bad = _first_bad_edge(g, x)
    if bad is not None:
        raise ValidityError(
            f"not a twin cover: edge {bad} of G-X is not a twin edge"
        )
    rest, relabel = delete_vertices(g, x)
    old = {new: v for v, new in relabel.items()}
    out = []
    for comp in connected_components(rest):
        members = tuple(old[i] for i in comp)
        nbhd = g.neighbors(members[0]) & x
        for a, b in combinations(members, 2):
            if not g.has_edge(a, b):
                raise ValidityError(f"component {members} is not a clique")
        for a in members[1:]:
            if g.neighbors(a) & x != nbhd:
                raise ValidityError(
                    f"component {members} has non-uniform neighborhood in X"
                )
        out.append(TwinClique(members, nbhd))
    out.sort(key=lambda c: c.min_vertex)
    return out


def type_key(ctype: CliqueType) -> tuple[tuple[int, ...], int]:
    """Sort key for a clique type: sorted neighborhood list, then size."""
    s_set, s = ctype
    return (tuple(sorted(s_set)), s)


def cliques_by_type(cliques: Iterable[TwinClique]) -> dict[CliqueType, list[TwinClique]]:
    """Group twin-cliques by type, types in :func:`type_key` order."""
    groups: dict[CliqueType, list[TwinClique]] = {}
    for c in cliques:
        groups.setdefault(c.type, []).append(c)
    for members in groups.values():
        members.sort(key=lambda c: c.min_vertex)
    return {t: groups[t] for t in sorted(groups, key=type_key)}


def m_of_S(cliques: Sequence[TwinClique], s_set: Iterable[int]) -> int:
    """Largest twin-clique whose X-neighborhood is exactly ``s_set`` (0 if none)."""
    s_set = frozenset(s_set)
    return max((c.size for c in cliques if c.neighborhood == s_set), default=0)


def twin_core_graph(g: Graph) -> Graph:
    """``g`` with every twin edge removed (same vertex set)."""
    return Graph(g.n, frozenset(e for e in g.edges if not _is_twin_edge(g, *e)))


def greedy_maximal_matching(g: Graph) -> list[tuple[int, int]]:
    matched: set[int] = set()
    matching = []
    for u, v in g.edge_list():
        if u not in matched and v not in matched:
            matching.append((u, v))
            matched.update((u, v))
    return matching


def approx_twin_cover(g: Graph) -> frozenset[int]:
    """Endpoints of a greedy maximal matching of :func:`twin_core_graph`.

    The result is a twin cover of size at most ``2 * tc(g)``.
    """
    matching = greedy_maximal_matching(twin_core_graph(g))
    cover = frozenset(v for e in matching for v in e)
    assert is_twin_cover(g, cover)
    return cover


def exact_twin_cover(g: Graph, budget: int | None = None) -> frozenset[int]:
    """Minimum twin cover, as a minimum vertex cover of the twin-core graph.

    Subsets are tried by increasing size in lexicographic order, so the
    witness is canonical. ``budget`` caps the number of subsets examined.
    """
    core = twin_core_graph(g)
    edges = core.edge_list()
    examined = 0
    for size in range(g.n + 1):
        for cand in combinations(range(g.n), size):
            examined += 1
            if budget is not None and examined > budget:
                raise BudgetError(
                    f"exact twin cover: more than {budget} subsets examined"
                )
            chosen = set(cand)
            if all(u in chosen or v in chosen for u, v in edges):
                cover = frozenset(cand)
                assert is_twin_cover(g, cover)
                return cover
    raise AssertionError("V(G) is always a twin cover")
