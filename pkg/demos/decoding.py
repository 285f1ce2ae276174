# %% [markdown]
# Syndrome decoding with sum-product.
#
# The decoder sees only H e and returns an estimate.  A quantum decode is
# still fine when estimate + e lands in the row space of H: that difference
# is a stabilizer and does nothing to the encoded state.

# %%
import numpy as np

from fgldpc.decoder import DecoderConfig, build_tanner, spa_decode
from fgldpc.gf2 import RowSpace
from fgldpc.matrices import build_h_eg1

H = build_h_eg1(2, 8)
g = build_tanner(H)
space = RowSpace(H)
cfg = DecoderConfig(prior_flip_probability=0.01)
print(f"n = {g.n}, checks = {g.m}, edges = {g.n_edges}")

# %%
e = np.zeros(63, dtype=np.uint8)
e[[3, 40]] = 1
out = spa_decode(g, H.matvec(e), cfg)
print("converged:", out.converged, "after", out.iterations_used, "iterations")
print("estimate support:", np.flatnonzero(out.estimate))

# %% [markdown]
# Heavier errors: count how often the decode is exact, degenerate, or wrong.

# %%
rng = np.random.default_rng(0)
tally = {"exact": 0, "degenerate": 0, "failed": 0}
for _ in range(500):
    e = (rng.random(63) < 0.07).astype(np.uint8)
    out = spa_decode(g, H.matvec(e), cfg)
    if out.converged and np.array_equal(out.estimate, e):
        tally["exact"] += 1
    elif out.converged and space.contains(out.estimate ^ e):
        tally["degenerate"] += 1
    else:
        tally["failed"] += 1
print(tally)
