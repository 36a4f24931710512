"""Exhaustive search for the fewest edges forcing a given rainbow number.

Orders up to 7 finish in seconds; order 8 needs ``allow_large=True``.
"""
# %%
from rainbowconn.search import characterize_minimal_rvc, compute_e2, compute_e_prime

for n in range(3, 8):
    report = compute_e2(n)
    print(f"e2({n}) = {report.value}  ({len(report.witnesses)} extremal graphs, "
          f"{report.graphs_examined} examined)")

# %%
# Vertex version: for every feasible (n, d) the minimum is a tree, and the
# extremal trees are exactly those whose leaf deletion leaves P_d.
for n, d in ((5, 2), (6, 3), (7, 2), (7, 4)):
    report = compute_e_prime(n, d)
    same = report.witnesses == characterize_minimal_rvc(n, d)
    print(f"e'_{d}({n}) = {report.value}, witnesses = {[str(w) for w in report.witnesses]}, "
          f"match leaf-deletion characterization: {same}")
