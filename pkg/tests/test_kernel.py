import json
from math import comb

import pytest

from twincfvc.errors import InputError, ValidityError
from twincfvc.generate import GeneratorSpec, generate_instance
from twincfvc.graph import Graph, complete_graph, path_graph, star_graph
from twincfvc.kernel import (
    AnnotatedInstance,
    clique_budget,
    decide_via_kernel,
    kernel_bound,
    kernelize,
    kernelize_annotated,
    no_instance,
)
from twincfvc.svcfc import svcfc_decide
from twincfvc.twins import is_twin_cover

from oracles import svcfc_decide_bf


@pytest.mark.parametrize("t, k, expected", [(0, 1, 2), (1, 1, 5), (2, 2, 50), (0, 3, 12)])
def test_kernel_bound(t, k, expected):
    assert kernel_bound(t, k) == expected


def test_kernel_bound_rejects_bad_arguments():
    with pytest.raises(InputError):
        kernel_bound(-1, 1)
    with pytest.raises(InputError):
        kernel_bound(1, 0)


def test_clique_budget():
    assert clique_budget(1, 1, 1) == 2
    assert clique_budget(2, 3, 2) == 9
    assert clique_budget(0, 2, 3) == 0


def test_annotated_instance_validation():
    inst = AnnotatedInstance(path_graph(3), 2, {1})
    assert inst.t == 1 and inst.kappa == 3 and inst.is_valid
    assert not AnnotatedInstance(path_graph(3), 2, set()).is_valid
    with pytest.raises(ValidityError):
        AnnotatedInstance(Graph.from_edges(3, [(0, 1)]), 2, {0}).validate()
    with pytest.raises(InputError):
        AnnotatedInstance(path_graph(3), 0, {1})


def test_star_with_five_leaves():
    g = star_graph(5)
    rep = kernelize_annotated(AnnotatedInstance(g, 1, {0}), check_steps=True)
    assert rep.n_before == 6 and rep.realized == 3 and rep.bound == 5
    assert not rep.no_instance_shortcut
    assert rep.reduced.g == star_graph(2) and rep.reduced.x == {0}
    # surplus deleted largest minimum vertex first
    assert [c.vertices for c in rep.deleted_cliques] == [(5,), (4,), (3,)]
    assert not svcfc_decide_bf(g.n, g.edges, 1)
    assert not svcfc_decide_bf(3, rep.reduced.g.edges, 1)


def test_triangle_hanging_off_the_cover_hits_the_shortcut():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    rep = kernelize_annotated(AnnotatedInstance(g, 2, {0}))
    assert rep.no_instance_shortcut
    assert rep.reduced == no_instance()
    assert rep.reduced.g == complete_graph(2) and rep.reduced.k == 1
    assert rep.reduced.x == {0, 1}
    assert not svcfc_decide(rep.reduced.g, rep.reduced.k).answer


def test_small_instance_is_unchanged():
    inst = AnnotatedInstance(star_graph(3), 2, {0})
    rep = kernelize_annotated(inst, check_steps=True)
    assert rep.reduced == inst and rep.deleted_cliques == []
    assert rep.relabel == {v: v for v in range(4)}


def test_kernelize_examples():
    for n in range(1, 6):
        rep = kernelize(complete_graph(n), n)
        assert rep.reduced.g == complete_graph(n) and rep.reduced.x == frozenset()
    for n in range(2, 6):
        assert kernelize(complete_graph(n), n - 1).reduced == no_instance()

    rep = kernelize(star_graph(5), 2)
    assert rep.reduced.x == {0, 1} and rep.reduced.t == 2
    assert rep.reduced.g == star_graph(5)
    assert svcfc_decide_bf(6, star_graph(5).edges, 2)


def test_kernelize_rejects_disconnected():
    with pytest.raises(ValidityError):
        kernelize(Graph.from_edges(3, [(0, 1)]), 2)


def test_stress_family_hits_the_budget():
    for t, k, s in [(1, 2, 1), (2, 2, 2), (1, 3, 2), (2, 3, 1)]:
        budget = clique_budget(t, k, s)
        spec = GeneratorSpec(t, {((1 << t) - 1, s): budget + 3}, seed=7, core_edge_probability=1.0)
        g, x = generate_instance(spec)
        rep = kernelize_annotated(AnnotatedInstance(g, k, x), check_steps=True)
        assert rep.realized == t + budget * s <= rep.bound
        assert len(rep.deleted_cliques) == 3


def test_report_json():
    rep = kernelize_annotated(AnnotatedInstance(star_graph(5), 1, {0}))
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["n_before"] == 6 and doc["n_after"] == 3 and doc["bound"] == 5
    assert doc["k_out"] == 1 and doc["x_out"] == [0] and doc["shortcut"] is False
    assert doc["deletions"][0] == {"S": [0], "s": 1, "vertices": [5]}
    assert doc["edges_out"] == [[0, 1], [0, 2]]


def test_decide_via_kernel_agrees_with_direct_search():
    for g, k in [(star_graph(5), 1), (star_graph(5), 2), (path_graph(4), 2),
                 (path_graph(4), 3), (complete_graph(4), 3), (complete_graph(4), 4)]:
        assert decide_via_kernel(g, k) == svcfc_decide(g, k).answer


def test_counting_identity():
    for k in range(1, 21):
        assert sum(s * comb(k, s) for s in range(1, k + 1)) == k * 2 ** (k - 1)


def test_outputs_keep_the_cover_valid():
    for seed in range(25):
        spec = GeneratorSpec(2, {(0b01, 1): 5, (0b11, 2): 4, (0b10, 1): 2}, seed, 0.5)
        g, x = generate_instance(spec)
        rep = kernelize_annotated(AnnotatedInstance(g, 2, x), check_steps=True)
        assert is_twin_cover(rep.reduced.g, rep.reduced.x)
        assert rep.realized <= rep.bound
