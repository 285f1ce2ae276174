# %% [markdown]
# Block error rate over the depolarizing channel.
#
# Each qubit suffers X, Y or Z with probability f_m each.  The X and Z parts
# are decoded separately; a trial fails unless both decodes succeed.  A longer
# code wins at low noise and loses at high noise, since a single
# uncorrectable error sinks the whole block.
#
# Takes about a minute.  Raise TRIALS for smoother curves.

# %%
from pathlib import Path

from fgldpc.matrices import build_h_eg1
from fgldpc.simulate import CodeInfo, records_csv, run_sweep

TRIALS = 2000
F_M = [0.005, 0.01, 0.015, 0.02, 0.03]

records = []
for q in (8, 16):
    H = build_h_eg1(2, q)
    info = CodeInfo(f"eg1:2,{q}", "eg1", 2, q)
    records += run_sweep(H, F_M, TRIALS, seed=1, code=info)

for r in records:
    lo, hi = r.interval
    print(f"{r.code.code_id:10} f_m={r.f_m:<6} bler={r.bler:.4f}  [{lo:.4f}, {hi:.4f}]")

# %%
out = Path("block_error_sweep.csv")
out.write_text(records_csv(records))
print("wrote", out)

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for q in (8, 16):
        rs = [r for r in records if r.code.q == q]
        plt.semilogy([r.f_m for r in rs], [max(r.bler, 1e-5) for r in rs], "o-", label=f"EG(2,{q})")
    plt.xlabel("f_m")
    plt.ylabel("block error rate")
    plt.legend()
    plt.savefig("block_error_sweep.png", dpi=120)
