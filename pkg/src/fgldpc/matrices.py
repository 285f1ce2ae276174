"""Parity-check matrices of the four finite-geometry LDPC families.

=========  ====================================  ==========================
family     rows                                  columns
=========  ====================================  ==========================
``eg1``    origin-avoiding lines of EG(p, q)      non-origin points
``eg2``    non-origin points                      origin-avoiding lines
``pg1``    lines of PG(p, q)                      points
``pg2``    points                                 lines
=========  ====================================  ==========================

Columns of ``eg1`` follow ``1, alpha, ..., alpha^(q^p - 2)`` and its rows are
grouped by cyclic class, so the matrix is a vertical stack of circulants.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import build_eg, build_pg, cyclic_classes, parallel_classes_2d
from .gf2 import BinaryMatrix

FAMILIES = ("eg1", "eg2", "pg1", "pg2")


@functools.lru_cache(maxsize=16)
def eg1_row_lines(p: int, q: int) -> np.ndarray:
    """Line index (into ``build_eg(p, q).lines``) of each row of H_EG1."""
    return np.array([li for cls in cyclic_classes(build_eg(p, q)) for li in cls], dtype=np.int64)


@functools.lru_cache(maxsize=16)
def build_h_eg1(p: int, q: int) -> BinaryMatrix:
    G = build_eg(p, q)
    rows = eg1_row_lines(p, q)
    return BinaryMatrix.from_supports(G.lines[rows] - 1, G.n_points - 1)


@functools.lru_cache(maxsize=16)
def build_h_eg2(p: int, q: int) -> BinaryMatrix:
    return build_h_eg1(p, q).T


@functools.lru_cache(maxsize=16)
def build_h_pg1(p: int, q: int) -> BinaryMatrix:
    G = build_pg(p, q)
    return BinaryMatrix.from_supports(G.lines, G.n_points)


@functools.lru_cache(maxsize=16)
def build_h_pg2(p: int, q: int) -> BinaryMatrix:
    return build_h_pg1(p, q).T


BUILDERS = {"eg1": build_h_eg1, "eg2": build_h_eg2, "pg1": build_h_pg1, "pg2": build_h_pg2}


def build(family: str, p: int, q: int) -> BinaryMatrix:
    try:
        builder = BUILDERS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    return builder(p, q)


def eg1_parallel_row_order(q: int) -> np.ndarray:
    """Row permutation of H_EG1(2, q) that groups rows by parallel class."""
    position = {li: r for r, li in enumerate(eg1_row_lines(2, q))}
    return np.array(
        [position[li] for cls in parallel_classes_2d(build_eg(2, q)) for li in cls], dtype=np.int64
    )


@dataclass(frozen=True)
class Shape:
    """Closed-form structure of a family member: ``m x n``, row weight L, column weight J."""

    m: int
    n: int
    L: int
    J: int


def expected_shape(family: str, p: int, q: int) -> Shape:
    if family in ("eg1", "eg2"):
        n_pts = q**p - 1
        n_lines = (q ** (p - 1) - 1) * (q**p - 1) // (q - 1)
        per_point = (q**p - 1) // (q - 1) - 1
        if family == "eg1":
            return Shape(m=n_lines, n=n_pts, L=q, J=per_point)
        return Shape(m=n_pts, n=n_lines, L=per_point, J=q)
    if family in ("pg1", "pg2"):
        n_pts = (q ** (p + 1) - 1) // (q - 1)
        n_lines = sum(q**i for i in range(p)) * sum(q**i for i in range(p + 1)) // (q + 1)
        per_point = (q**p - 1) // (q - 1)
        if family == "pg1":
            return Shape(m=n_lines, n=n_pts, L=q + 1, J=per_point)
        return Shape(m=n_pts, n=n_lines, L=per_point, J=q + 1)
    raise ValueError(f"unknown family {family!r}")


def expected_density(family: str, p: int, q: int) -> Fraction:
    if family in ("eg1", "eg2"):
        return Fraction(q, q**p - 1)
    return Fraction(q * q - 1, q ** (p + 1) - 1)
