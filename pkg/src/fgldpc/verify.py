"""Structural property checks for a family member."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .gf2 import BinaryMatrix
from .matrices import build, eg1_parallel_row_order, expected_density, expected_shape


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def is_power_of_two(q: int) -> bool:
    return q & (q - 1) == 0


def expected_gram_rank(family: str, p: int, q: int) -> int | None:
    """Gram rank forced by the geometry, where it is known in closed form."""
    if family == "eg1" and p == 2 and is_power_of_two(q):
        return q
    if family == "pg1" and p == 2 and is_power_of_two(q):
        return 1
    if family == "pg2" and p == 3:
        return 1
    return None


def parallel_block_pattern(q: int) -> np.ndarray:
    """``(q+1) x (q+1)`` blocks of size ``q-1``: zero on the diagonal, ones elsewhere."""
    blocks = 1 - np.eye(q + 1, dtype=np.uint8)
    return np.kron(blocks, np.ones((q - 1, q - 1), dtype=np.uint8))


def structural_checks(family: str, p: int, q: int, H: BinaryMatrix | None = None) -> list[Check]:
    H = build(family, p, q) if H is None else H
    shape = expected_shape(family, p, q)
    rw, cw = H.row_weights(), H.col_weights()
    checks = [
        Check("dimensions", H.shape == (shape.m, shape.n), f"{H.shape[0]}x{H.shape[1]}"),
        Check("row weight", bool(np.all(rw == shape.L)), f"L = {shape.L}"),
        Check("column weight", bool(np.all(cw == shape.J)), f"J = {shape.J}"),
        Check(
            "density",
            Fraction(H.nnz, H.n_rows * H.n_cols) == expected_density(family, p, q),
            str(expected_density(family, p, q)),
        ),
    ]
    row_overlap = gf2.pairwise_overlap_max(H)
    checks.append(Check("row overlap <= 1", row_overlap <= 1, f"max {row_overlap}"))
    checks.append(Check("column overlap <= 1 (girth >= 6)", gf2.girth_at_least_6(H)))

    if family in ("eg1", "pg1"):
        checks.append(Check("cyclic: row shifts stay in the row space", gf2.cyclic_shift_closed(H)))
    if family == "eg1":
        n = H.n_cols
        blocks = [H.rows(range(i, i + n)) for i in range(0, H.n_rows, n)]
        checks.append(Check("stack of circulants", all(gf2.is_circulant(b) for b in blocks), f"{len(blocks)} blocks"))
    if family == "eg2":
        checks.append(Check("quasi-cyclic: circulant blocks", gf2.circulant_blocks(H, H.n_rows)))

    G = gf2.gram(H)
    e = gf2.rank_gf2(G)
    want = expected_gram_rank(family, p, q)
    checks.append(Check("gram rank", want is None or e == want, f"rank {e}" + ("" if want is None else f", expected {want}")))
    if want == 1:
        checks.append(Check("gram is all-ones", G.nnz == G.n_rows * G.n_cols))
    if family == "eg1" and want is not None:
        order = eg1_parallel_row_order(q)
        permuted = gf2.gram(H.rows(order))
        checks.append(Check("gram parallel-class block pattern", np.array_equal(permuted.to_dense(), parallel_block_pattern(q))))
    return checks
