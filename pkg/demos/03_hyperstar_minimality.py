"""
Hyperstars minimize the least eigenvalue
========================================

Among all 4-uniform hypertrees with a fixed number of edges, the hyperstar
has the smallest least eigenvalue, and it is the unique minimizer.  The
same shape appears when pendant hypertrees are attached to a fixed host:
piling everything onto one vertex as a hyperstar is optimal.
"""

from heigen import (
    complete_hypergraph,
    enumerate_family,
    enumerate_hypertrees,
    find_minimizer,
    hyperstar,
)
from heigen.analysis import check_minimizer_structure
from heigen.canon import are_isomorphic
from heigen.constructions import RootedHypergraph, coalesce

# Enumerate hypertrees up to isomorphism and rank them by least eigenvalue.
for m in (2, 3, 4):
    fam = enumerate_hypertrees(m, 4)
    report = find_minimizer(fam, family_name=f"hypertrees m={m}")
    print(f"hypertrees with {m} edges ({len(fam)} shapes):")
    for i, e in enumerate(report.entries):
        mark = "  <- minimizer" if i in report.minimizer_indices else ""
        print(f"  lambda = {e.eigenvalue:+.9f}{mark}")
    winner = report.minimizers[0].graph
    print("  winner is the hyperstar:",
          are_isomorphic(winner, hyperstar(m, 4).graph))

# Attach m pendant edges to K_5^4 in every nonisomorphic way.  The best
# arrangement glues a hyperstar onto a single host vertex.
g0 = complete_hypergraph(5, 4)
for m in (1, 2):
    fam = enumerate_family(g0, m)
    refs = [coalesce(RootedHypergraph(g0, u), hyperstar(m, 4)).graph
            for u in range(g0.n)]
    report = find_minimizer(fam, family_name=f"T_{m}(K_5^4)")
    status, detail = check_minimizer_structure(report, refs)
    values = sorted(e.eigenvalue for e in report.entries)
    print(f"\nT_{m}(K_5^4): {len(fam)} members, eigenvalues "
          + ", ".join(f"{v:+.6f}" for v in values))
    print(f"  structure check: {status}{' (' + detail + ')' if detail else ''}")
