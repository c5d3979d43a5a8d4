import pytest

from heigen import (
    Hypergraph,
    RootedHypergraph,
    attach_hypertrees,
    blowup_power,
    coalesce,
    complete_hypergraph,
    cycle_blowup,
    hyperstar,
    is_connected,
    is_hypertree,
    kth_power_of_graph,
    relocate,
)
from heigen.canon import are_isomorphic
from heigen.hypergraph import find_odd_bipartition, induced_subhypergraph


def single_edge(k=4):
    return Hypergraph(k, k, (tuple(range(k)),))


def test_hyperstar_shape():
    for m in range(1, 6):
        for k in (2, 4, 6):
            s = hyperstar(m, k)
            g = s.graph
            assert s.root == 0
            assert g.n == 1 + m * (k - 1)
            assert g.m == m
            assert g.degree(0) == m
            assert all(g.degree(v) == 1 for v in range(1, g.n))
            assert is_hypertree(g)
    with pytest.raises(ValueError):
        hyperstar(-1, 4)


def test_power_of_graph():
    star = kth_power_of_graph([(0, 1), (0, 2), (0, 3)], 4)
    assert are_isomorphic(star, hyperstar(3, 4).graph)
    path = kth_power_of_graph([(0, 1), (1, 2)], 4)
    assert path.n == 7 and path.m == 2
    assert is_hypertree(path)
    # power of a tree with m edges is a hypertree on m(k-1)+1 vertices
    tree = [(0, 1), (1, 2), (1, 3), (3, 4)]
    for k in (2, 4, 6):
        p = kth_power_of_graph(tree, k)
        assert is_hypertree(p)
        assert p.n == len(tree) * (k - 1) + 1
    with pytest.raises(ValueError):
        kth_power_of_graph([(0, 0)], 4)
    with pytest.raises(ValueError):
        kth_power_of_graph([(0, 1), (1, 0)], 4)


def test_blowup_power():
    c4 = cycle_blowup(4, 4)
    assert c4.n == 8 and c4.m == 4
    assert all(len(e) == 4 for e in c4.edges)
    with pytest.raises(ValueError):
        blowup_power([(0, 1)], 3)
    # odd-bipartite exactly when the base graph is bipartite
    bases = {
        "path": ([(0, 1), (1, 2)], True),
        "c4": ([(0, 1), (1, 2), (2, 3), (3, 0)], True),
        "c3": ([(0, 1), (1, 2), (2, 0)], False),
        "c5": ([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], False),
    }
    for edges, bipartite in bases.values():
        g = blowup_power(edges, 4)
        assert (find_odd_bipartition(g) is not None) == bipartite


def test_complete_hypergraph():
    g = complete_hypergraph(5, 4)
    assert g.n == 5 and g.m == 5
    assert complete_hypergraph(6, 4).m == 15
    assert all(g.degree(v) == 4 for v in range(5))
    with pytest.raises(ValueError):
        complete_hypergraph(3, 4)


def test_coalesce_merges_roots():
    a = RootedHypergraph(single_edge(), 0)
    b = RootedHypergraph(single_edge(), 2)
    c = coalesce(a, b)
    assert c.graph.n == 7
    assert c.graph.m == 2
    assert c.root == 0
    assert c.graph.degree(0) == 2
    assert are_isomorphic(c.graph, hyperstar(2, 4).graph)
    assert c.host_edges == (0,) and c.branch_edges == (1,)
    assert len(c.branch_root_edges()) == 1
    assert c.branch_vertex_map[2] == 0


def test_coalesce_stars_add():
    for a, b in ((1, 1), (2, 3), (4, 1)):
        c = coalesce(hyperstar(a, 4), hyperstar(b, 4))
        assert are_isomorphic(c.graph, hyperstar(a + b, 4).graph)


def test_coalesce_sizes_and_errors():
    c = coalesce(RootedHypergraph(complete_hypergraph(5, 4), 0), hyperstar(3, 4))
    assert c.graph.n == 5 + 10 - 1
    assert is_connected(c.graph)
    with pytest.raises(ValueError):
        coalesce(RootedHypergraph(single_edge(4), 0), RootedHypergraph(single_edge(6), 0))


def test_relocate_alignment():
    g0 = kth_power_of_graph([(0, 1), (1, 2), (2, 3)], 4)
    h = hyperstar(2, 4)
    relo = relocate(g0, 0, 3, h)
    before, after = relo
    assert before.n == after.n and before.m == after.m
    assert set(relo.branch_vertices) == set(range(g0.n, before.n))
    sub_b, _ = induced_subhypergraph(before, range(g0.n))
    sub_a, _ = induced_subhypergraph(after, range(g0.n))
    assert sub_b == g0 == sub_a
    # graphs differ exactly in the branch edges
    assert [before.edges[j] for j in relo.host_edges] == [after.edges[j] for j in relo.host_edges]
    changed = [j for j in range(before.m) if before.edges[j] != after.edges[j]]
    assert set(changed) <= set(relo.branch_edges)
    with pytest.raises(ValueError):
        relocate(g0, 1, 1, h)


def test_relocate_single_edge_host():
    e = single_edge()
    relo = relocate(e, 0, 1, RootedHypergraph(single_edge(), 0))
    assert are_isomorphic(relo.before, relo.after)
    assert is_hypertree(relo.before)


def test_attach_hypertrees():
    g0 = single_edge()
    out = attach_hypertrees(g0, [(0, hyperstar(2, 4)), (1, hyperstar(1, 4))])
    assert out.m == 1 + 3
    assert out.n == 4 + 3 * 3
    assert is_connected(out)
    sub, _ = induced_subhypergraph(out, range(4))
    assert sub == g0
    assert attach_hypertrees(g0, []) == g0
    with pytest.raises(ValueError):
        attach_hypertrees(g0, [(0, RootedHypergraph(complete_hypergraph(5, 4), 0))])
    with pytest.raises(ValueError):
        attach_hypertrees(Hypergraph(8, 4, ((0, 1, 2, 3), (4, 5, 6, 7))), [])


def test_attach_matches_coalesce_star():
    g0 = complete_hypergraph(5, 4)
    via_attach = attach_hypertrees(g0, [(2, hyperstar(3, 4))])
    via_coalesce = coalesce(RootedHypergraph(g0, 2), hyperstar(3, 4)).graph
    assert via_attach == via_coalesce
