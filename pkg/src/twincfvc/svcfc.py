"""Exact strong CFVC checks and search at desk scale.

Two independent routes decide whether a pair of vertices has a
conflict-free shortest path:

* :func:`is_strong_cfvc_coloring` enumerates shortest paths (capped) and
  counts color multiplicities on each, and
* :func:`find_violating_pair` runs a reachability pass over the layered
  shortest-path DAG, tracking for one color at a time whether it has been
  seen zero times or exactly once.

The search in :func:`svcfc_decide` uses the second route; tests compare the
two.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .coloring import Coloring, _check_total, _Counter, chromatic_number_exact
from .errors import InputError, ValidityError
from .graph import Graph, all_distances, enumerate_shortest_paths, is_connected, search_order

DEFAULT_PATH_CAP = 100_000


def path_is_conflict_free(c: Sequence[int], path: Sequence[int]) -> bool:
    """Whether some color occurs exactly once along ``path``."""
    counts = Counter(c[v] for v in path)
    return 1 in counts.values()


@dataclass(frozen=True)
class CfvcVerdict:
    is_strong: bool
    violating_pair: tuple[int, int] | None = None
    paths_overflowed: bool = False


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValidityError("graph is not connected")


def is_strong_cfvc_coloring(g: Graph, c: Sequence[int],
                            cap: int = DEFAULT_PATH_CAP) -> CfvcVerdict:
    """Check the strong CFVC property by enumerating shortest paths.

    At most ``cap`` shortest paths are inspected per pair. If that cut-off
    is hit anywhere, ``paths_overflowed`` is set; a reported violation on
    such a pair may then be a false negative, never a false positive.
    """
    _require_connected(g)
    _check_total(g, c)
    overflowed = False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            found = enumerate_shortest_paths(g, u, v, cap)
            overflowed |= found.overflow
            if not any(path_is_conflict_free(c, p) for p in found.paths):
                return CfvcVerdict(False, (u, v), overflowed)
    return CfvcVerdict(True, None, overflowed)


# -- layered reachability route ------------------------------------------------

class _PairPlan(NamedTuple):
    u: int
    v: int
    layers: tuple[tuple[int, ...], ...]  # layers[i]: interval vertices at distance i from u


def _pair_plans(g: Graph, dist: list[list[int]], min_distance: int) -> list[_PairPlan]:
    plans = []
    for u in range(g.n):
        du = dist[u]
        for v in range(u + 1, g.n):
            d = du[v]
            if d < min_distance:
                continue
            dv = dist[v]
            layers: list[list[int]] = [[] for _ in range(d + 1)]
            for w in range(g.n):
                if du[w] >= 0 and du[w] + dv[w] == d:
                    layers[du[w]].append(w)
            plans.append(_PairPlan(u, v, tuple(map(tuple, layers))))
    return plans


def _plan_ok(g: Graph, plan: _PairPlan, c: Sequence[int]) -> bool:
    colors = {c[w] for layer in plan.layers for w in layer}
    for alpha in colors:
        # zero/once: interval vertices reachable from u on a shortest path
        # along which alpha has appeared zero times / exactly once so far.
        u = plan.u
        if c[u] == alpha:
            zero, once = 0, 1 << u
        else:
            zero, once = 1 << u, 0
        for layer in plan.layers[1:]:
            nzero = nonce = 0
            for w in layer:
                nb = g.neighbor_mask(w)
                bit = 1 << w
                if c[w] == alpha:
                    if nb & zero:
                        nonce |= bit
                else:
                    if nb & zero:
                        nzero |= bit
                    if nb & once:
                        nonce |= bit
            zero, once = nzero, nonce
            if not once and not zero:
                break
        if once:
            return True
    return False


def has_conflict_free_shortest_path(g: Graph, c: Sequence[int], u: int, v: int) -> bool:
    """Exact test for one pair, without enumerating paths."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InputError("endpoints must differ")
    u, v = min(u, v), max(u, v)
    dist = all_distances(g)
    if dist[u][v] < 0:
        raise ValidityError(f"vertices {u} and {v} are disconnected")
    plan = next(p for p in _pair_plans(g, dist, 0) if (p.u, p.v) == (u, v))
    return _plan_ok(g, plan, c)


def find_violating_pair(g: Graph, c: Sequence[int]) -> tuple[int, int] | None:
    """Lexicographically first pair without a conflict-free shortest path."""
    _require_connected(g)
    _check_total(g, c)
    for plan in _pair_plans(g, all_distances(g), 1):
        if not _plan_ok(g, plan, c):
            return (plan.u, plan.v)
    return None


# -- search ------------------------------------------------------------------

class Decision(NamedTuple):
    answer: bool
    witness: Coloring | None


def _decide(g: Graph, k: int, counter: _Counter, prune_proper: bool) -> Decision:
    if g.n == 1:
        return Decision(True, Coloring((1,)))
    order = search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    dist = all_distances(g)
    # Under properness every pair at distance <= 2 is automatically served:
    # the edge itself, or the middle vertex whose color differs from both ends.
    plans = _pair_plans(g, dist, 3 if prune_proper else 1)
    due: list[list[_PairPlan]] = [[] for _ in range(g.n)]
    for plan in plans:
        last = max(pos[w] for layer in plan.layers for w in layer)
        due[last].append(plan)
    earlier = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]

    colors = [0] * g.n

    def place(i: int, used: int) -> bool:
        if i == g.n:
            return True
        counter.tick()
        v = order[i]
        taken = {colors[w] for w in earlier[i]} if prune_proper else ()
        for col in range(1, min(k, used + 1) + 1):
            if col in taken:
                continue
            colors[v] = col
            if all(_plan_ok(g, p, colors) for p in due[i]):
                if place(i + 1, max(used, col)):
                    return True
        colors[v] = 0
        return False

    if place(0, 0):
        return Decision(True, Coloring.of(colors).normalized())
    return Decision(False, None)


def svcfc_decide(g: Graph, k: int, budget: int | None = None,
                 prune_proper: bool = True) -> Decision:
    """Is there a strong CFVC coloring of ``g`` with at most ``k`` colors?

    Exhaustive over colorings in canonical form (vertices in
    :func:`~twincfvc.graph.search_order`, each opening at most one new
    color). Improper partial colorings are cut
    since every strong CFVC coloring is proper; ``prune_proper=False``
    disables that cut and checks every pair instead.
    """
    if k < 1:
        raise InputError(f"k must be positive, got {k}")
    _require_connected(g)
    return _decide(g, k, _Counter(budget, "svcfc search"), prune_proper)


def svcfc_optimal(g: Graph, budget: int | None = None) -> tuple[int, Coloring]:
    """``svcfc(g)`` with a witness coloring.

    The search starts at ``chi(g)``, which is a lower bound because strong
    CFVC colorings are proper.
    """
    _require_connected(g)
    counter = _Counter(budget, "svcfc search")
    k, _ = chromatic_number_exact(g, budget)
    while True:
        answer, witness = _decide(g, k, counter, True)
        if answer:
            return k, witness
        k += 1


def svcfc_exact(g: Graph, budget: int | None = None) -> int:
    return svcfc_optimal(g, budget)[0]
