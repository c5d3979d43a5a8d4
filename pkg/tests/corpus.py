"""Shared small-graph corpus used by parity and spectral property tests."""

import numpy as np

from heigen import (
    Hypergraph,
    complete_hypergraph,
    cycle_blowup,
    hyperstar,
    kth_power_of_graph,
)
from heigen.analysis import enumerate_hypertrees, random_connected_hypergraph


def corpus_graphs() -> list[Hypergraph]:
    graphs = [
        Hypergraph(2, 2, ((0, 1),)),
        Hypergraph(4, 4, ()),
        Hypergraph(4, 4, ((0, 1, 2, 3),)),
        Hypergraph(5, 3, ((0, 1, 2), (2, 3, 4))),
        Hypergraph(6, 3, ((0, 1, 2), (2, 3, 4), (3, 4, 5))),
        hyperstar(3, 2).graph,
        kth_power_of_graph([(0, 1), (1, 2), (2, 3)], 2),
        kth_power_of_graph([(0, 1), (1, 2)], 4),
        kth_power_of_graph([(0, 1), (0, 2), (0, 3)], 4),
        complete_hypergraph(5, 4),
        complete_hypergraph(6, 4),
        cycle_blowup(3, 4),
        cycle_blowup(4, 4),
        cycle_blowup(5, 4),
    ]
    for m in (1, 2, 3):
        graphs.append(hyperstar(m, 4).graph)
    for m in (1, 2, 3):
        graphs.extend(enumerate_hypertrees(m, 4))
    rng = np.random.default_rng(77)
    for _ in range(10):
        n = int(rng.integers(4, 10))
        graphs.append(random_connected_hypergraph(rng, n, int(rng.integers(0, 4)), 4))
    return graphs
