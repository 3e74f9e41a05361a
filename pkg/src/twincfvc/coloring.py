"""Proper colorings, exact chromatic number, the twin-cover extension
number and the fresh-color construction for strong CFVC colorings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import BudgetError, InputError, StructuralError, ValidityError
from .graph import Graph, bfs_distances, delete_vertices, enumerate_shortest_paths, search_order
from .twins import TwinClique, decompose_twin_cliques, is_twin_cover, m_of_S


@dataclass(frozen=True)
class Coloring:
    """Total map from vertices ``0..n-1`` to positive integer colors."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        for v, c in enumerate(self.colors):
            if not isinstance(c, int) or isinstance(c, bool) or c < 1:
                raise InputError(f"vertex {v} has invalid color {c!r}")

    @classmethod
    def of(cls, colors: Iterable[int]) -> Coloring:
        return cls(tuple(colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self) -> Iterator[int]:
        return iter(self.colors)

    @property
    def palette(self) -> frozenset[int]:
        return frozenset(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def color_set(self, vertices: Iterable[int]) -> set[int]:
        return {self.colors[v] for v in vertices}

    def to_list(self) -> list[int]:
        return list(self.colors)

    def normalized(self) -> Coloring:
        """Rename colors to ``1, 2, ...`` in order of first appearance by vertex label."""
        rename: dict[int, int] = {}
        for c in self.colors:
            rename.setdefault(c, len(rename) + 1)
        return Coloring(tuple(rename[c] for c in self.colors))


def _check_total(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.n:
        raise InputError(f"coloring covers {len(c)} vertices, graph has {g.n}")


def is_proper(g: Graph, c: Sequence[int]) -> bool:
    _check_total(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


# -- exact chromatic number ---------------------------------------------------

class _Counter:
    def __init__(self, budget: int | None, what: str):
        self.budget = budget
        self.what = what
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetError(f"{self.what}: node budget {self.budget} exceeded")


def _k_colorable(g: Graph, k: int, counter: _Counter) -> list[int] | None:
    # Canonical search: each vertex in order may open at most one new color.
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]
    colors = [0] * g.n

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        counter.tick()
        v = order[i]
        taken = {colors[w] for w in earlier[i]}
        for c in range(1, min(k, used + 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            if place(i + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if place(0, 0) else None


def chromatic_number_exact(g: Graph, budget: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring (desk scale only)."""
    if g.n == 0:
        raise InputError("empty graph")
    counter = _Counter(budget, "chromatic number")
    k = 1 if not g.edges else 2
    while True:
        found = _k_colorable(g, k, counter)
        if found is not None:
            return k, Coloring.of(found).normalized()
        k += 1


# -- extension number of a coloring of the twin cover ------------------------

@dataclass(frozen=True)
class ExtensionReport:
    phi: dict[int, int]
    k_phi: int
    witness_S: frozenset[int]
    extension: Coloring


def _check_phi(g: Graph, x: frozenset[int], phi: Mapping[int, int]) -> None:
    if set(phi) != set(x):
        raise InputError("phi must color exactly the twin cover vertices")
    for v, c in phi.items():
        if not isinstance(c, int) or c < 1:
            raise InputError(f"phi gives vertex {v} invalid color {c!r}")
    for u, v in g.edges:
        if u in x and v in x and phi[u] == phi[v]:
            raise InputError(f"phi is not proper on G[X]: edge ({u}, {v})")


def _subset_key(s_set: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(s_set))


def _k_phi_over(candidates: Iterable[frozenset[int]], phi: Mapping[int, int],
                cliques: Sequence[TwinClique]) -> tuple[int, frozenset[int]]:
    best, witness = -1, frozenset()
    for s_set in sorted(set(candidates), key=_subset_key):
        val = len({phi[v] for v in s_set}) + m_of_S(cliques, s_set)
        if val > best:
            best, witness = val, s_set
    return best, witness


def k_phi_all_subsets(x: Iterable[int], phi: Mapping[int, int],
                      cliques: Sequence[TwinClique]) -> tuple[int, frozenset[int]]:
    """``max |phi(S)| + m(S)`` over all ``2^t`` subsets ``S`` of ``x``."""
    xs = sorted(x)
    subsets = (frozenset(c) for r in range(len(xs) + 1) for c in combinations(xs, r))
    return _k_phi_over(subsets, phi, cliques)


def extension_number(g: Graph, x: Iterable[int], phi: Mapping[int, int],
                     cliques: Sequence[TwinClique] | None = None,
                     exhaustive_check: bool = False) -> ExtensionReport:
    """Minimum palette size of a proper extension of ``phi`` to all of ``g``.

    Only the neighborhoods of twin-cliques and ``X`` itself are scanned:
    subsets with ``m(S) = 0`` are dominated by ``S = X``. With
    ``exhaustive_check`` the value is compared against all ``2^t`` subsets.

    The extension keeps ``phi`` on ``X``. Each twin-clique takes the
    smallest colors of a ``K_phi``-color palette that avoid its
    neighborhood's colors.
    """
    x = frozenset(x)
    _check_phi(g, x, phi)
    if cliques is None:
        cliques = decompose_twin_cliques(g, x)
    candidates = [c.neighborhood for c in cliques] + [x]
    k_phi, witness = _k_phi_over(candidates, phi, cliques)
    if exhaustive_check:
        full, _ = k_phi_all_subsets(x, phi, cliques)
        if full != k_phi:
            raise AssertionError(f"restricted K_phi {k_phi} != exhaustive {full}")

    # Palette of exactly k_phi colors containing phi(X).
    palette = sorted(set(phi.values()))
    c = 1
    while len(palette) < k_phi:
        if c not in phi.values():
            palette.append(c)
        c += 1
    palette.sort()

    colors = [0] * g.n
    for v in x:
        colors[v] = phi[v]
    for clique in cliques:
        banned = {phi[v] for v in clique.neighborhood}
        free = [p for p in palette if p not in banned]
        assert len(free) >= clique.size
        for v, p in zip(clique.vertices, free):
            colors[v] = p
    return ExtensionReport(dict(phi), k_phi, witness, Coloring.of(colors))


def canonical_colorings(g: Graph, vertices: Iterable[int]) -> Iterator[dict[int, int]]:
    """Proper colorings of ``g[vertices]`` up to renaming of colors.

    Vertices are colored in increasing order and each may open at most one
    new color, so every partition into independent color classes appears
    exactly once.
    """
    order = sorted(vertices)
    phi: dict[int, int] = {}

    def rec(i: int, used: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(phi)
            return
        v = order[i]
        taken = {phi[w] for w in g.neighbors(v) if w in phi}
        for c in range(1, used + 2):
            if c not in taken:
                phi[v] = c
                yield from rec(i + 1, max(used, c))
                del phi[v]

    yield from rec(0, 0)


def chi_via_twin_cover(g: Graph, x: Iterable[int]) -> int:
    """Chromatic number as the minimum extension number over colorings of ``G[X]``."""
    x = frozenset(x)
    cliques = decompose_twin_cliques(g, x)
    candidates = [c.neighborhood for c in cliques] + [x]
    return min(
        _k_phi_over(candidates, phi, cliques)[0]
        for phi in canonical_colorings(g, x)
    )


# -- fresh colors on a shortest-path hitting set ------------------------------

def find_unhit_long_path(g: Graph, y: Iterable[int]) -> tuple[int, ...] | None:
    """A shortest path of length >= 3 avoiding ``y``, or ``None``.

    Such a path exists for a pair ``u, v`` outside ``y`` exactly when their
    distance in ``g - y`` equals their distance in ``g``.
    """
    y = frozenset(y)
    rest, relabel = delete_vertices(g, y)
    old = {new: v for v, new in relabel.items()}
    for u in range(g.n):
        if u in y:
            continue
        dg = bfs_distances(g, u)
        dr = bfs_distances(rest, relabel[u])
        for v in range(u + 1, g.n):
            if v in y or dg[v] < 3:
                continue
            if dr[relabel[v]] == dg[v]:
                p = enumerate_shortest_paths(rest, relabel[u], relabel[v], 1)
                return tuple(old[w] for w in p.paths[0])
    return None


def svcfc_upper_coloring(g: Graph, x: Iterable[int], y: Iterable[int] | None = None,
                         budget: int | None = None) -> Coloring:
    """Strong CFVC coloring with at most ``chi(g) + |y|`` colors.

    Starts from a minimum proper coloring and gives every vertex of ``y``
    its own fresh color ``chi+1, chi+2, ...`` in vertex order. ``y``
    defaults to ``x`` and must hit every shortest path of length >= 3.
    """
    x = frozenset(x)
    y = x if y is None else frozenset(y)
    for v in x | y:
        g.check_vertex(v)
    if not y <= x:
        raise InputError("y must be a subset of the twin cover x")
    if not is_twin_cover(g, x):
        raise ValidityError("x is not a twin cover")
    bad = find_unhit_long_path(g, y)
    if bad is not None:
        raise StructuralError(f"shortest path {list(bad)} of length >= 3 avoids y")
    chi, phi = chromatic_number_exact(g, budget)
    colors = phi.to_list()
    for i, v in enumerate(sorted(y)):
        colors[v] = chi + 1 + i
    return Coloring.of(colors)
