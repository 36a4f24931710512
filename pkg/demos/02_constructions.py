"""Sparse graphs with rainbow connection 2, and trees with a prescribed rvc."""
# %%
# K_{k, n-k} colored by binary codes: the vertex y_j reads the bits of j
# across the k edges arriving from the small side.
from rainbowconn import lemma1_family, minimal_rvc_tree, verify_rc_coloring, verify_rvc_coloring
from rainbowconn.bounds import lemma1_upper
from rainbowconn.graph6 import graph6_encode

print(" n   k  edges  upper")
for n in (3, 5, 8, 12, 20, 40, 60):
    fam = lemma1_family(n)
    assert verify_rc_coloring(fam.graph, fam.coloring)
    print(f"{n:2d}  {fam.k:2d}  {fam.edge_count:5d}  {lemma1_upper(n):5d}")

# %%
# A tree whose internal vertices form a path on d vertices needs exactly d
# vertex colors, and it has only n - 1 edges.
for n, d in ((6, 2), (7, 3), (9, 4)):
    t = minimal_rvc_tree(n, d)
    ok = verify_rvc_coloring(t.tree, t.coloring)
    print(f"n={n} d={d} graph6={graph6_encode(t.tree)} colors={t.coloring.colors} verifies={ok}")
