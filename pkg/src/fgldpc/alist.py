"""MacKay alist format.

::

    n m
    max_col_weight max_row_weight
    <n column weights>
    <m row weights>
    <n lines: 1-based row indices of each column, zero-padded to max_col_weight>
    <m lines: 1-based column indices of each row, zero-padded to max_row_weight>
"""

from __future__ import annotations

import os
from typing import IO

import numpy as np

from .gf2 import BinaryMatrix


def _padded(indices: list[np.ndarray], width: int) -> list[str]:
    out = []
    for idx in indices:
        vals = [str(i + 1) for i in idx] + ["0"] * (width - len(idx))
        out.append(" ".join(vals))
    return out


def format_alist(M: BinaryMatrix) -> str:
    m, n = M.shape
    row_sets = M.row_supports()
    col_sets = M.T.row_supports()
    col_w = [len(c) for c in col_sets]
    row_w = [len(r) for r in row_sets]
    max_c = max(col_w, default=0)
    max_r = max(row_w, default=0)
    lines = [
        f"{n} {m}",
        f"{max_c} {max_r}",
        " ".join(map(str, col_w)),
        " ".join(map(str, row_w)),
        *_padded(col_sets, max_c),
        *_padded(row_sets, max_r),
    ]
    return "\n".join(lines) + "\n"


def write_alist(M: BinaryMatrix, dest: str | os.PathLike | IO[str]) -> None:
    text = format_alist(M)
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def parse_alist(text: str) -> BinaryMatrix:
    # Keep blank lines: an all-zero column or row is written as an empty line.
    lines = [ln.split() for ln in text.lstrip().splitlines()]
    try:
        n, m = map(int, lines[0])
        max_c, max_r = map(int, lines[1])
        col_w = [int(x) for x in lines[2]]
        row_w = [int(x) for x in lines[3]]
        col_lines = lines[4:4 + n]
        row_lines = lines[4 + n:4 + n + m]
    except (IndexError, ValueError) as exc:
        raise ValueError(f"malformed alist header: {exc}") from None
    if len(col_w) != n or len(row_w) != m or len(col_lines) != n or len(row_lines) != m:
        raise ValueError("alist section lengths do not match n and m")

    rows, cols = [], []
    for j, entries in enumerate(col_lines):
        idx = [int(x) - 1 for x in entries if int(x) != 0]
        if len(idx) != col_w[j] or len(entries) > max(max_c, 1):
            raise ValueError(f"column {j + 1}: weight mismatch")
        rows.extend(idx)
        cols.extend([j] * len(idx))
    M = BinaryMatrix.from_coordinates(rows, cols, (m, n))

    supports = M.row_supports()
    for i, entries in enumerate(row_lines):
        idx = [int(x) - 1 for x in entries if int(x) != 0]
        if len(idx) != row_w[i] or sorted(idx) != supports[i].tolist():
            raise ValueError(f"row {i + 1} disagrees with the column lists")
    return M


def read_alist(src: str | os.PathLike | IO[str]) -> BinaryMatrix:
    if hasattr(src, "read"):
        return parse_alist(src.read())
    with open(src) as fh:
        return parse_alist(fh.read())
