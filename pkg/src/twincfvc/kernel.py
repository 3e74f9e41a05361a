"""Twin-cover kernelization for the strong CFVC number.

Within each twin-clique type ``(S, s)`` only ``(t+1) * C(k, s)`` cliques are
kept; a twin-clique larger than ``k`` turns the instance into the fixed
no-instance ``(K_2, 1, {0, 1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .errors import InputError, StructuralError, ValidityError
from .graph import Graph, all_distances, complete_graph, delete_vertices, is_connected
from .svcfc import svcfc_decide
from .twins import (
    TwinClique,
    approx_twin_cover,
    cliques_by_type,
    decompose_twin_cliques,
    exact_twin_cover,
    is_twin_cover,
)


@dataclass(frozen=True)
class AnnotatedInstance:
    g: Graph
    k: int
    x: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", frozenset(self.x))
        if self.k < 1:
            raise InputError(f"k must be positive, got {self.k}")
        for v in self.x:
            self.g.check_vertex(v)

    @property
    def t(self) -> int:
        return len(self.x)

    @property
    def kappa(self) -> int:
        return self.k + len(self.x)

    @property
    def is_valid(self) -> bool:
        return is_connected(self.g) and is_twin_cover(self.g, self.x)

    def validate(self) -> None:
        if not is_connected(self.g):
            raise ValidityError("graph is not connected")
        if not is_twin_cover(self.g, self.x):
            raise ValidityError("annotation is not a twin cover")


def no_instance() -> AnnotatedInstance:
    return AnnotatedInstance(complete_graph(2), 1, frozenset({0, 1}))


@dataclass(frozen=True)
class KernelReport:
    reduced: AnnotatedInstance
    deleted_cliques: list[TwinClique]
    bound: int
    n_before: int
    no_instance_shortcut: bool
    relabel: dict[int, int] = field(default_factory=dict)

    @property
    def realized(self) -> int:
        return self.reduced.g.n

    def to_json(self) -> dict:
        return {
            "n_before": self.n_before,
            "n_after": self.realized,
            "bound": self.bound,
            "k_out": self.reduced.k,
            "x_out": sorted(self.reduced.x),
            "deletions": [
                {
                    "S": sorted(c.neighborhood),
                    "s": c.size,
                    "vertices": list(c.vertices),
                }
                for c in self.deleted_cliques
            ],
            "shortcut": self.no_instance_shortcut,
            "edges_out": [list(e) for e in self.reduced.g.edge_list()],
        }


def kernel_bound(t: int, k: int) -> int:
    """``max(2, t + (t+1) * k * 2**(t+k-1))``."""
    if t < 0 or k < 1:
        raise InputError(f"need t >= 0 and k >= 1, got t={t}, k={k}")
    return max(2, t + (t + 1) * k * 2 ** (t + k - 1))


def clique_budget(t: int, k: int, s: int) -> int:
    """How many twin-cliques of one type of size ``s`` survive the rule."""
    return (t + 1) * comb(k, s)


def planned_deletions(inst: AnnotatedInstance,
                      cliques: Iterable[TwinClique]) -> list[TwinClique]:
    """Twin-cliques the reduction rule removes, in deletion order.

    Per type, the cliques with the smallest minimum vertex are kept;
    the surplus is deleted largest minimum vertex first.
    """
    out: list[TwinClique] = []
    for (_, s), members in cliques_by_type(cliques).items():
        keep = clique_budget(inst.t, inst.k, s)
        out.extend(reversed(members[keep:]))
    return out


def _check_step(g: Graph, x: frozenset[int], gone: set[int], clique: TwinClique,
                before: list[list[int]]) -> None:
    gone = gone | set(clique.vertices)
    sub, relabel = delete_vertices(g, gone)
    if not is_connected(sub):
        raise StructuralError(f"deleting {clique.vertices} disconnects the graph")
    if not is_twin_cover(sub, [relabel[v] for v in x]):
        raise StructuralError(f"deleting {clique.vertices} breaks the twin cover")
    after = all_distances(sub)
    for a, ra in relabel.items():
        for b, rb in relabel.items():
            if after[ra][rb] != before[a][b]:
                raise StructuralError(
                    f"deleting {clique.vertices} changes d({a}, {b})"
                )


def kernelize_annotated(inst: AnnotatedInstance, check_steps: bool = False) -> KernelReport:
    """Apply the reduction rule exhaustively to a valid annotated instance.

    With ``check_steps`` every single clique deletion is replayed and checked
    to keep the graph connected, keep ``X`` a twin cover, and leave all
    distances among surviving vertices unchanged.
    """
    inst.validate()
    g, k, x = inst.g, inst.k, inst.x
    bound = kernel_bound(inst.t, k)
    cliques = decompose_twin_cliques(g, x)

    if any(c.size > k for c in cliques):
        return KernelReport(no_instance(), [], bound, g.n, True)

    doomed = planned_deletions(inst, cliques)
    if check_steps:
        gone: set[int] = set()
        original = all_distances(g)
        for clique in doomed:
            _check_step(g, x, gone, clique, original)
            gone.update(clique.vertices)

    reduced_g, relabel = delete_vertices(g, (v for c in doomed for v in c.vertices))
    reduced = AnnotatedInstance(reduced_g, k, frozenset(relabel[v] for v in x))
    report = KernelReport(reduced, doomed, bound, g.n, False, relabel)
    assert report.realized <= bound
    return report


def kernelize(g: Graph, k: int, exact_tc: bool = False,
              budget: int | None = None) -> KernelReport:
    """Kernelize an unannotated instance using a computed twin cover.

    By default the twin cover comes from a maximal matching of the
    twin-core graph (at most twice the minimum); ``exact_tc`` uses a
    minimum one instead.
    """
    if not is_connected(g):
        raise ValidityError("graph is not connected")
    y = exact_twin_cover(g, budget) if exact_tc else approx_twin_cover(g)
    return kernelize_annotated(AnnotatedInstance(g, k, y))


def decide_via_kernel(g: Graph, k: int, budget: int | None = None) -> bool:
    """Decide ``svcfc(g) <= k`` by kernelizing first, then searching exhaustively."""
    report = kernelize(g, k)
    if report.no_instance_shortcut:
        return False
    return svcfc_decide(report.reduced.g, k, budget).answer
