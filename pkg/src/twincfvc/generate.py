"""Random instances with a planted twin cover.

The twin cover occupies labels ``0..t-1``; twin-cliques follow in type
order. A type is ``(mask, s)`` where bit ``i`` of ``mask`` says the clique
is adjacent to cover vertex ``i``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InputError, ValidityError
from .graph import Graph, connected_components

Type = tuple[int, int]


@dataclass(frozen=True)
class GeneratorSpec:
    t: int
    clique_type_counts: dict[Type, int] = field(default_factory=dict)
    seed: int = 0
    core_edge_probability: float = 0.5

    def n(self) -> int:
        return self.t + sum(s * c for (_, s), c in self.clique_type_counts.items())


def _check(spec: GeneratorSpec) -> None:
    if spec.t < 0:
        raise InputError("t must be nonnegative")
    if not 0.0 <= spec.core_edge_probability <= 1.0:
        raise InputError("core_edge_probability must lie in [0, 1]")
    for (mask, s), count in spec.clique_type_counts.items():
        if not 0 <= mask < (1 << spec.t):
            raise InputError(f"mask {mask:#b} does not fit t={spec.t}")
        if s < 1 or count < 0:
            raise InputError(f"bad type ({mask}, {s}) x {count}")
    if spec.n() == 0:
        raise InputError("spec describes an empty graph")
    n_cliques = sum(spec.clique_type_counts.values())
    isolated = sum(c for (mask, _), c in spec.clique_type_counts.items() if mask == 0)
    if isolated and (spec.t > 0 or n_cliques > 1):
        raise ValidityError(
            "a twin-clique with empty neighborhood in X cannot be connected "
            "to anything else"
        )


def generate_instance(spec: GeneratorSpec) -> tuple[Graph, frozenset[int]]:
    """Build a connected graph whose twin-cliques are exactly as requested.

    Edges inside X are drawn with ``core_edge_probability``; if the result
    is disconnected, extra X-X edges chain the components together.
    """
    _check(spec)
    rng = random.Random(spec.seed)
    t = spec.t
    edges: set[tuple[int, int]] = set()
    for u in range(t):
        for v in range(u + 1, t):
            if rng.random() < spec.core_edge_probability:
                edges.add((u, v))
    nxt = t
    for (mask, s) in sorted(spec.clique_type_counts):
        nbhd = [i for i in range(t) if mask >> i & 1]
        for _ in range(spec.clique_type_counts[(mask, s)]):
            members = range(nxt, nxt + s)
            for a in members:
                edges.update((a, b) for b in members if a < b)
                edges.update((x, a) for x in nbhd)
            nxt += s
    g = Graph(nxt, frozenset(edges))
    comps = connected_components(g)
    if len(comps) > 1:
        # every component holds a cover vertex here (checked in _check)
        anchors = [min(c) for c in comps]
        for a, b in zip(anchors, anchors[1:]):
            edges.add((a, b))
        g = Graph(nxt, frozenset(edges))
    return g, frozenset(range(t))


def random_spec(rng: random.Random, max_t: int = 3, max_s: int = 3,
                max_cliques: int = 30, max_n: int = 40) -> GeneratorSpec:
    """Draw a random generator spec within the given limits."""
    t = rng.randint(0, max_t)
    if t == 0:
        return GeneratorSpec(0, {(0, rng.randint(1, max_s)): 1}, rng.getrandbits(64))
    counts: dict[Type, int] = {}
    budget_cliques = rng.randint(0, max_cliques)
    room = max_n - t
    for _ in range(rng.randint(1, 4)):
        key = (rng.randint(1, (1 << t) - 1), rng.randint(1, max_s))
        want = rng.randint(1, max(1, budget_cliques))
        want = min(want, room // key[1], budget_cliques)
        if want <= 0:
            continue
        counts[key] = counts.get(key, 0) + want
        budget_cliques -= want
        room -= want * key[1]
    return GeneratorSpec(t, counts, rng.getrandbits(64), rng.choice([0.0, 0.3, 0.6, 1.0]))
