"""Canonical form checked against brute-force relabeling oracles."""

import itertools

import numpy as np
import pytest

from heigen import Hypergraph, are_isomorphic, canonical_form, hyperstar
from heigen.canon import SearchBudgetExceeded, canonical_graph, twin_classes
from heigen.constructions import (
    complete_hypergraph,
    cycle_blowup,
    kth_power_of_graph,
)

from corpus import corpus_graphs


def relabel(g: Hypergraph, perm) -> Hypergraph:
    edges = [tuple(sorted(perm[v] for v in e)) for e in g.edges]
    return Hypergraph(g.n, g.k, tuple(sorted(edges)))


def brute_canonical(g: Hypergraph):
    best = None
    for perm in itertools.permutations(range(g.n)):
        cand = relabel(g, perm).edges
        if best is None or cand < best:
            best = cand
    return (g.n, g.k, best)


def small_graphs():
    out = [
        Hypergraph(2, 2, ((0, 1),)),
        Hypergraph(4, 2, ((0, 1), (2, 3))),
        hyperstar(2, 3).graph,
        Hypergraph(6, 3, ((0, 1, 2), (2, 3, 4), (4, 5, 0))),
        Hypergraph(5, 4, ((0, 1, 2, 3), (1, 2, 3, 4))),
        complete_hypergraph(5, 4),
        Hypergraph(7, 4, ((0, 1, 2, 3), (0, 4, 5, 6))),
        Hypergraph(6, 2, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0))),
    ]
    return out


def test_matches_brute_force_on_small_graphs():
    for g in small_graphs():
        assert canonical_form(g) == brute_canonical(g)


def test_invariant_under_relabeling():
    rng = np.random.default_rng(5)
    for g in corpus_graphs():
        if g.n > 14:
            continue
        want = canonical_form(g)
        for _ in range(10):
            perm = rng.permutation(g.n)
            assert canonical_form(relabel(g, perm)) == want


def test_canonical_graph_is_isomorphic_fixed_point():
    for g in corpus_graphs():
        if g.n > 14:
            continue
        c = canonical_graph(g)
        assert canonical_form(c) == canonical_form(g)
        assert c.edges == canonical_form(g)[2]


def test_twin_classes_partition():
    g = hyperstar(3, 4).graph
    classes = twin_classes(g)
    assert sorted(v for cl in classes for v in cl) == list(range(g.n))
    # center is alone, each edge's leaves form one class
    sizes = sorted(len(cl) for cl in classes)
    assert sizes == [1, 3, 3, 3]


def test_isomorphic_and_not():
    a = kth_power_of_graph([(0, 1), (0, 2), (0, 3)], 4)
    b = hyperstar(3, 4).graph
    assert are_isomorphic(a, b)
    path = kth_power_of_graph([(0, 1), (1, 2), (2, 3)], 4)
    broom = kth_power_of_graph([(0, 1), (1, 2), (1, 3)], 4)
    assert not are_isomorphic(path, broom)
    assert not are_isomorphic(a, complete_hypergraph(5, 4))
    assert not are_isomorphic(a, kth_power_of_graph([(0, 1), (0, 2)], 4))


def test_budget_raises():
    g = cycle_blowup(6, 6)
    with pytest.raises(SearchBudgetExceeded):
        canonical_form(g, node_budget=2)


def incidence_nx(g: Hypergraph):
    """Vertex+edge colored bipartite incidence graph for the VF2 oracle."""
    nx = pytest.importorskip("networkx")
    b = nx.Graph()
    for v in range(g.n):
        b.add_node(("v", v), kind="vertex")
    for j, e in enumerate(g.edges):
        b.add_node(("e", j), kind="edge")
        for v in e:
            b.add_edge(("e", j), ("v", v))
    return b


def test_agrees_with_vf2_oracle():
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.isomorphism import categorical_node_match

    nm = categorical_node_match("kind", None)
    graphs = [g for g in corpus_graphs() if g.n <= 12]
    rng = np.random.default_rng(11)
    picks = rng.permutation(len(graphs))[:12]
    for i in picks:
        for j in picks:
            a, b = graphs[i], graphs[j]
            if a.k != b.k:
                continue
            vf2 = nx.is_isomorphic(incidence_nx(a), incidence_nx(b), node_match=nm)
            assert are_isomorphic(a, b) == vf2
