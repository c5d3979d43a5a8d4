"""Isomorphism-invariant canonical forms for small uniform hypergraphs.

Vertices with identical edge stars are interchangeable by an automorphism,
so they fall into twin classes, and every edge is a disjoint union of whole
classes.  Relabelings that keep each class contiguous reach every edge list
the quotient structure can produce, so the lexicographic minimum over class
orderings is a true canonical form.  A branch-and-bound over class orderings
keeps the search far below factorial cost at the sizes used here.
"""

from __future__ import annotations

from collections import defaultdict

from .hypergraph import Hypergraph

CanonicalForm = tuple[int, int, tuple[tuple[int, ...], ...]]


def twin_classes(g: Hypergraph) -> list[tuple[int, ...]]:
    """Vertex classes with identical edge stars, ordered by least member."""
    by_star: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for v in range(g.n):
        by_star[g.incident_edge_indices(v)].append(v)
    return sorted((tuple(c) for c in by_star.values()), key=lambda c: c[0])


class SearchBudgetExceeded(RuntimeError):
    pass


def canonical_form(g: Hypergraph, node_budget: int = 1_000_000) -> CanonicalForm:
    """Lexicographically least edge list over class-contiguous relabelings.

    Equal outputs characterize isomorphic graphs.  Raises
    SearchBudgetExceeded if the branch-and-bound visits more than
    ``node_budget`` nodes (far beyond anything the desk-scale families need).
    """
    if g.m == 0:
        return (g.n, g.k, ())
    classes = twin_classes(g)
    r = len(classes)
    sizes = [len(c) for c in classes]
    class_of = {}
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    # Each edge as the set of classes it contains; whole classes only.
    edge_classes: list[set[int]] = []
    for e in g.edges:
        cs = {class_of[v] for v in e}
        assert sum(sizes[i] for i in cs) == g.k
        edge_classes.append(cs)
    class_edges: list[list[int]] = [[] for _ in range(r)]
    for j, cs in enumerate(edge_classes):
        for i in cs:
            class_edges[i].append(j)

    m, k = g.m, g.k
    known: list[list[int]] = [[] for _ in range(m)]
    used = [False] * r
    best: list[tuple[int, ...]] | None = None
    nodes = 0

    def viable(next_label: int) -> bool:
        """Sound prune test against the incumbent; True means keep searching."""
        if best is None:
            return True
        touched = sorted(tuple(p) for p in known if p)
        for i, p in enumerate(touched):
            b = best[i]
            for j, pj in enumerate(p):
                if pj != b[j]:
                    return pj < b[j]
            if len(p) < k:
                return True  # ties the incumbent on known labels only
        if len(touched) == m:
            return False  # completes to exactly the incumbent
        # Remaining edges are untouched; their labels are all >= next_label.
        return best[len(touched)][0] >= next_label

    def descend(next_label: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchBudgetExceeded(f"canonical search exceeded {node_budget} nodes")
        if next_label == g.n:
            value = sorted(tuple(p) for p in known)
            if best is None or value < best:
                best = value
            return
        ranked = []
        for c in range(r):
            if used[c]:
                continue
            block = range(next_label, next_label + sizes[c])
            in_c = set(class_edges[c])
            key = sorted(
                tuple(known[j]) + tuple(block) if j in in_c else tuple(known[j])
                for j in range(m)
                if known[j] or j in in_c
            )
            ranked.append((key, c))
        ranked.sort()
        for _, c in ranked:
            block = list(range(next_label, next_label + sizes[c]))
            used[c] = True
            for j in class_edges[c]:
                known[j].extend(block)
            if viable(next_label + sizes[c]):
                descend(next_label + sizes[c])
            for j in class_edges[c]:
                del known[j][-sizes[c]:]
            used[c] = False

    descend(0)
    assert best is not None
    return (g.n, g.k, tuple(best))


def canonical_graph(g: Hypergraph) -> Hypergraph:
    """An isomorphic copy carrying the canonical edge list."""
    n, k, edges = canonical_form(g)
    return Hypergraph(n, k, edges)


def are_isomorphic(g1: Hypergraph, g2: Hypergraph) -> bool:
    if (g1.n, g1.k, g1.m) != (g2.n, g2.k, g2.m):
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False
    c1, c2 = twin_classes(g1), twin_classes(g2)
    if sorted(len(c) for c in c1) != sorted(len(c) for c in c2):
        return False
    return canonical_form(g1) == canonical_form(g2)
