"""Upper and lower bounds on e2(n), scaled by n log2 n.

Both ratios approach 1, so e2(n) grows like n log2 n.
"""
# %%
from rainbowconn.bounds import ratio_table, rows_to_csv, sandwich_check

orders = [2 ** j for j in range(17, 31, 3)] + [10 ** 6]
print(rows_to_csv(ratio_table(sorted(orders))))
print("sandwich holds:", sandwich_check(orders))

# %%
# Below 2^17 only the weaker lower bound is available, and for small n it
# is negative, i.e. says nothing.
for row in ratio_table([8, 64, 1024]):
    print(row.n, round(row.lower_i, 3), row.lower_ii)
