"""Exact rainbow connection numbers of small graphs.

Run with ``python3 demos/01_rainbow_numbers.py``.
"""
# %%
# A path needs every edge colored differently, so rc(P_n) = n - 1.
# Cycles are cheaper: rc(C_n) = ceil(n / 2) for n >= 4.
from rainbowconn import complete_bipartite, cycle_graph, path_graph
from rainbowconn.coloring import coloring_to_text
from rainbowconn.solver import check_witness, rc_exact, rvc_exact

for n in range(3, 8):
    print(f"P_{n}: rc = {rc_exact(path_graph(n)).value}   C_{n}: rc = {rc_exact(cycle_graph(n)).value}")

# %%
# Complete bipartite graphs.  With s rows on the small side, each vertex on
# the large side gets a binary word of length s read off its edges, so the
# value creeps up as t outgrows 2^s.
for s in (2, 3):
    values = [rc_exact(complete_bipartite(s, t)).value for t in range(s, 9)]
    print(f"rc(K_{s},t) for t = {s}..8:", values)

# %%
# Every answer carries a coloring that can be checked on its own.
w = rc_exact(complete_bipartite(2, 4))
print(coloring_to_text(w.coloring))
print("witness verifies:", check_witness(complete_bipartite(2, 4), w))

# %%
# The vertex version colors the interior of paths instead of edges.
for n in range(5, 10):
    print(f"rvc(C_{n}) = {rvc_exact(cycle_graph(n)).value}")
