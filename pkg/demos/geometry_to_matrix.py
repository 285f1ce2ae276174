# %% [markdown]
# From a finite geometry to a parity-check matrix.
#
# EG(2, 4) is the affine plane over GF(4): 16 points, 20 lines of 4 points.
# Dropping the origin and the lines through it leaves a 15 x 15 matrix whose
# rows are the incidence vectors of the remaining lines.

# %%
import numpy as np

from fgldpc import gf2
from fgldpc.geometry import build_eg, cyclic_classes, eg_lines_not_through_origin
from fgldpc.matrices import build_h_eg1, build_h_eg2

G = build_eg(2, 4)
print(G)
print("field:", G.field)
print("first lines (point indices):")
print(G.lines[:5])

# %%
avoid = eg_lines_not_through_origin(G)
print(len(avoid), "lines miss the origin")
print("cyclic classes:", [len(c) for c in cyclic_classes(G)])

# %% [markdown]
# Column i of the matrix is the point alpha^i, so multiplying a line by alpha
# shifts its row one place to the right: the matrix is a circulant.

# %%
H = build_h_eg1(2, 4)
np.set_printoptions(linewidth=120)
print(H.to_dense())
print("row weights", set(H.row_weights().tolist()), "column weights", set(H.col_weights().tolist()))
print("circulant:", gf2.is_circulant(H))
print("max overlap of two rows:", gf2.pairwise_overlap_max(H))
print("no 4-cycles:", gf2.girth_at_least_6(H))

# %%
H2 = build_h_eg2(3, 2)
print("type-II EG(3,2):", H2.shape, "made of", H2.n_cols // H2.n_rows, "circulant blocks:",
      gf2.circulant_blocks(H2, H2.n_rows))
