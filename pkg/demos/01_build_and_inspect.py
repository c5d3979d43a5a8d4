"""
Building hypergraphs and checking their structure
=================================================

Constructors for the standard families, the structural predicates, and the
JSON file format.
"""

import tempfile

from heigen import (
    Hypergraph,
    complete_hypergraph,
    cycle_blowup,
    hyperstar,
    kth_power_of_graph,
)
from heigen.hypergraph import (
    dumps,
    find_odd_bipartition,
    is_connected,
    is_hypertree,
    load,
    save,
)

# A hypergraph is a vertex count, a uniformity, and sorted k-tuples.
# Edges are validated and normalized on construction.
g = Hypergraph(5, 4, ((0, 1, 2, 3), (1, 2, 3, 4)))
print(g)
print("degrees:", [g.degree(v) for v in range(g.n)])

# The hyperstar: m edges through one center vertex.  Its center is vertex 0.
star = hyperstar(3, 4).graph
print("\nhyperstar(3, 4):", star)
print("is_hypertree:", is_hypertree(star))

# The k-th power of a simple graph widens each 2-edge with fresh vertices.
# Powers of trees are exactly the hypertrees that come from simple trees.
path = kth_power_of_graph([(0, 1), (1, 2)], 4)
print("\npath power:", path)
print("connected:", is_connected(path), " hypertree:", is_hypertree(path))

# Blowing up a cycle gives a family with no odd bipartition when the cycle
# is odd.  The witness, when one exists, assigns each vertex a side so that
# every edge meets side one in an odd number of vertices.
for length in (3, 4):
    c = cycle_blowup(length, 4)
    w = find_odd_bipartition(c)
    print(f"\ncycle_blowup({length}, 4): n={c.n} m={c.m}")
    print("odd bipartition:", "none" if w is None else w.side)

# Complete 4-uniform hypergraph on 5 vertices: every 4-subset is an edge.
k54 = complete_hypergraph(5, 4)
print("\ncomplete(5, 4) has", k54.m, "edges, none odd-bipartite:",
      find_odd_bipartition(k54) is None)

# Files round-trip byte for byte; the format is versioned JSON.
with tempfile.NamedTemporaryFile(mode="w", suffix=".json", delete=False) as fh:
    path_name = fh.name
save(star, path_name)
again = load(path_name)
print("\nround trip equal:", again == star)
print(dumps(star), end="")
