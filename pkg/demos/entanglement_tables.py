# %% [markdown]
# Ebits needed by finite-geometry codes.
#
# A classical code with parity-check matrix H (n columns, dimension k) gives an
# entanglement-assisted quantum code [[n, 2k - n + e, d; e]] with
# e = rank(H H^T).  For the plane EG codes e grows like sqrt(n); for the PG
# codes it is stuck at 1.

# %%
from fgldpc.eaqecc import entanglement_rate_formula, format_table, generate_table

print("type-I EG(2, 2^s)")
print(format_table(generate_table("eg1", [4, 8, 16, 32])))

# %%
print("type-I PG(2, 2^s)")
print(format_table(generate_table("pg1", [4, 8, 16, 32])))

# %%
print("type-II PG(3, q)")
print(format_table(generate_table("pg2", [2, 3, 4, 5, 7])))

# %% [markdown]
# Closed forms for e/n; they agree with the e/n column above.

# %%
for s in range(2, 6):
    print(s, entanglement_rate_formula("eg1", s), entanglement_rate_formula("pg1", s))
