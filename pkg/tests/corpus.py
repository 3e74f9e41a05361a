"""Shared graph corpora for the property and acceptance tests."""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb
from pathlib import Path

import networkx as nx

from twincfvc.generate import GeneratorSpec
from twincfvc.graph import Graph
from twincfvc.io import parse_graph6_lines

DATA = Path(__file__).parent / "data"


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


@lru_cache(maxsize=None)
def connected_upto7() -> tuple[Graph, ...]:
    """Every connected graph on 1..7 vertices, one per isomorphism class."""
    return tuple(
        from_nx(h) for h in nx.graph_atlas_g()
        if h.number_of_nodes() >= 1 and nx.is_connected(h)
    )


@lru_cache(maxsize=None)
def connected8() -> tuple[Graph, ...]:
    """Every connected graph on 8 vertices (see data/make_corpus.py)."""
    return tuple(parse_graph6_lines((DATA / "connected8.g6").read_text()))


def connected_upto(n: int) -> tuple[Graph, ...]:
    small = tuple(g for g in connected_upto7() if g.n <= n)
    return small + connected8() if n >= 8 else small


def kernel_specs(count: int, seed: int = 2024) -> list[tuple[GeneratorSpec, int]]:
    """Planted instances with t <= 3, k <= 3, at most 30 twin-cliques, n <= 40.

    Most instances keep every clique size <= k and overfill at least one type
    beyond its budget, so the reduction rule really fires; about one in ten
    carries an oversized clique to hit the no-instance shortcut.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        t = rng.randint(1, 3)
        k = rng.randint(1, 3)
        oversized = rng.random() < 0.1
        counts: dict[tuple[int, int], int] = {}
        cliques, n = 0, t
        for _ in range(rng.randint(1, 3)):
            mask = rng.randint(1, (1 << t) - 1)
            s = rng.randint(1, k)
            budget = (t + 1) * comb(k, s)
            want = budget + rng.randint(-1, 4)
            want = min(max(1, want), 30 - cliques, (40 - n) // s)
            if want <= 0:
                continue
            counts[(mask, s)] = counts.get((mask, s), 0) + want
            cliques += want
            n += want * s
        if oversized and n + k + 1 <= 40 and cliques < 30:
            key = (rng.randint(1, (1 << t) - 1), k + 1)
            counts[key] = counts.get(key, 0) + 1
        if not counts:
            continue
        p = rng.choice([0.0, 0.4, 1.0])
        out.append((GeneratorSpec(t, counts, rng.getrandbits(64), p), k))
    return out
