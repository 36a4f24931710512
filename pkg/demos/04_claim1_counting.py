"""Counting the color patterns that a low-degree vertex sees.

For a 2-coloring with rc = 2, each low-degree vertex s gets a vector over
the high-degree side: +1 or -1 for the color of an edge to it, 0 for a
non-edge.  The number of vertices sharing a vector stays below k^2 + 1.
"""
# %%
from rainbowconn import build_graph, claim1_verify, lemma1_family
from rainbowconn.solver import rc2_decide

g = build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])
report = claim1_verify(g, rc2_decide(g), k=2)
print("K_4 plus a pendant, k = 2:")
print("  low side", report.S, "high side", report.T)
print("  max multiplicity", report.max_multiplicity, "bound", report.bound, "holds", report.holds)

# %%
for n in (10, 30, 60):
    fam = lemma1_family(n)
    r = claim1_verify(fam.graph, fam.coloring)
    print(f"n={n}: k={r.k} histogram={r.histogram()} holds={r.holds} vacuous={r.vacuous}")
