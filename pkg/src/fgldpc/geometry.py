"""Points and lines of the Euclidean geometry EG(p, q) and projective geometry PG(p, q).

Both are realized inside a field: EG(p, q) is GF(q^p) viewed as a
p-dimensional vector space over GF(q), and the points of PG(p, q) are the
multiplicative cosets of GF(q)* in GF(q^(p+1)).

Point orderings:

* EG: index 0 is the origin, index ``i + 1`` is ``alpha**i``.
* PG: index ``j`` is the class ``(alpha**j) = {beta**k alpha**j}`` with
  ``beta = alpha**n``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .field import MAX_FIELD_ORDER, FiniteField, make_field, prime_power, subfield_elements

#: Cap on the number of points of a geometry.
MAX_POINTS = 2**20


def _field_for(q: int, dim: int) -> FiniteField:
    """GF(q^dim), realized as GF(p'^(s*dim)) for ``q = p'^s``."""
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"q = {q} is not a prime power")
    prime, s = pp
    # PG(p, q) needs q^(p+1) field elements for (q^(p+1)-1)/(q-1) points, so
    # the field is allowed to exceed the default cap once the point count
    # has been checked against MAX_POINTS.
    return make_field(prime, s * dim, max(MAX_FIELD_ORDER, q**dim))


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class EuclideanGeometry:
    p: int
    q: int
    field: FiniteField
    #: ``points[i]`` is the field element (integer form) of point ``i``.
    points: np.ndarray
    #: ``(n_lines, q)`` sorted point indices.
    lines: np.ndarray
    #: index of the 1-dim subspace each line is a coset of.
    line_direction: np.ndarray
    passes_through_origin: np.ndarray

    @property
    def n_points(self) -> int:
        return self.points.size

    @property
    def n_lines(self) -> int:
        return self.lines.shape[0]

    def point_index(self, element: int) -> int:
        return 0 if element == 0 else int(self.field.log_table[element]) + 1

    def __repr__(self) -> str:
        return f"EG({self.p},{self.q}): {self.n_points} points, {self.n_lines} lines"


@dataclass(frozen=True, eq=False)
class ProjectiveGeometry:
    p: int
    q: int
    field: FiniteField
    #: ``point_of[x]`` is the point index of nonzero field element ``x``.
    point_of: np.ndarray
    #: ``(n_lines, q + 1)`` sorted point indices.
    lines: np.ndarray

    @property
    def n_points(self) -> int:
        return (self.q ** (self.p + 1) - 1) // (self.q - 1)

    @property
    def n_lines(self) -> int:
        return self.lines.shape[0]

    def __repr__(self) -> str:
        return f"PG({self.p},{self.q}): {self.n_points} points, {self.n_lines} lines"


def _check_params(p: int, q: int, n_points: int) -> None:
    if p < 2:
        raise ValueError(f"dimension must be at least 2, got {p}")
    if prime_power(q) is None:
        raise ValueError(f"q = {q} is not a prime power")
    if n_points > MAX_POINTS:
        raise ValueError(f"geometry would have {n_points} points > cap {MAX_POINTS}")


@functools.lru_cache(maxsize=16)
def build_eg(p: int, q: int) -> EuclideanGeometry:
    """Enumerate EG(p, q); lines are the cosets ``a + GF(q) b`` with ``b != 0``."""
    _check_params(p, q, q**p)
    F = _field_for(q, p)
    N = F.group_order
    n_dirs = N // (q - 1)
    sub = subfield_elements(F, q)

    elem_to_point = np.empty(F.order, dtype=np.int64)
    elem_to_point[0] = 0
    elem_to_point[F.antilog_table] = np.arange(1, N + 1)

    everything = np.arange(F.order, dtype=np.int64)
    lines, dirs = [], []
    for j in range(n_dirs):
        direction = F.mul(sub, int(F.alpha_power(j)))
        cosets = np.asarray(F.add(everything[:, None], direction[None, :]))
        # Keep one coset per line: the one generated from its smallest element.
        first = cosets[cosets.min(axis=1) == everything]
        lines.append(np.sort(elem_to_point[first], axis=1))
        dirs.append(np.full(first.shape[0], j))
    lines = np.concatenate(lines)
    dirs = np.concatenate(dirs)
    order = np.lexsort(lines.T[::-1])
    lines, dirs = lines[order], dirs[order]
    if np.unique(lines, axis=0).shape[0] != lines.shape[0]:
        raise AssertionError("duplicate lines in EG enumeration")

    points = np.concatenate(([0], F.antilog_table)).astype(np.int64)
    return EuclideanGeometry(
        p=p,
        q=q,
        field=F,
        points=_readonly(points),
        lines=_readonly(lines),
        line_direction=_readonly(dirs),
        passes_through_origin=_readonly(lines[:, 0] == 0),
    )


def eg_lines_not_through_origin(G: EuclideanGeometry) -> np.ndarray:
    """Indices of the lines that avoid the origin."""
    return np.flatnonzero(~G.passes_through_origin)


def cyclic_classes(G: EuclideanGeometry) -> list[list[int]]:
    """Orbits of origin-avoiding lines under multiplication by ``alpha``.

    Class ``c`` is returned as ``[l, alpha l, alpha^2 l, ...]`` (line indices),
    where ``l`` is the lowest-indexed line not in an earlier class.  On the
    non-origin points (exponent ``i`` at column ``i``) multiplication by
    ``alpha`` is a right cyclic shift.
    """
    n = G.n_points - 1
    avoid = eg_lines_not_through_origin(G)
    exps = G.lines[avoid] - 1
    lookup = {row.tobytes(): int(idx) for row, idx in zip(exps, avoid)}
    seen: set[int] = set()
    classes = []
    shifts = np.arange(n)[:, None]
    for row, idx in zip(exps, avoid):
        if int(idx) in seen:
            continue
        orbit = np.sort((row[None, :] + shifts) % n, axis=1)
        members = []
        for shifted in orbit:
            member = lookup[shifted.tobytes()]
            if member in seen:
                break
            seen.add(member)
            members.append(member)
        classes.append(members)
    return classes


def parallel_classes_2d(G: EuclideanGeometry) -> list[list[int]]:
    """For EG(2, q): group the origin-avoiding lines by direction.

    Gives ``q + 1`` classes of ``q - 1`` mutually disjoint lines.
    """
    if G.p != 2:
        raise ValueError(f"parallel_classes_2d needs a plane, got EG({G.p},{G.q})")
    avoid = eg_lines_not_through_origin(G)
    dirs = G.line_direction[avoid]
    return [avoid[dirs == d].tolist() for d in np.unique(dirs)]


@functools.lru_cache(maxsize=16)
def build_pg(p: int, q: int) -> ProjectiveGeometry:
    """Enumerate PG(p, q) from point pairs.

    The line through ``(alpha^i)`` and ``(alpha^j)`` is
    ``{(alpha^i)} + {(alpha^j + c alpha^i) : c in GF(q)}``.  Each line is built
    once, from its two smallest points.
    """
    n = (q ** (p + 1) - 1) // (q - 1)
    _check_params(p, q, n)
    F = _field_for(q, p + 1)
    sub = subfield_elements(F, q)

    point_of = np.full(F.order, -1, dtype=np.int64)
    point_of[F.antilog_table] = np.arange(F.group_order) % n

    lines: list[np.ndarray] = []
    through: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        covered = np.zeros(n, dtype=bool)
        covered[: i + 1] = True
        for li in through[i]:
            covered[lines[li]] = True
        a = int(F.alpha_power(i))
        scaled = F.mul(sub, a)
        for j in np.flatnonzero(~covered):
            if covered[j]:
                continue
            pts = point_of[np.asarray(F.add(int(F.alpha_power(j)), scaled))]
            line = np.sort(np.concatenate(([i], pts)))
            covered[line] = True
            for pt in line:
                through[pt].append(len(lines))
            lines.append(line)

    arr = np.array(lines, dtype=np.int64)
    arr = arr[np.lexsort(arr.T[::-1])]
    return ProjectiveGeometry(
        p=p, q=q, field=F, point_of=_readonly(point_of), lines=_readonly(arr)
    )


def incidence_vector(line, n_points: int) -> np.ndarray:
    """0/1 vector of length ``n_points`` with ones at the given point indices."""
    line = np.asarray(line, dtype=np.int64)
    if line.size and (line.min() < 0 or line.max() >= n_points):
        raise IndexError(f"point index out of range for {n_points} points")
    v = np.zeros(n_points, dtype=np.uint8)
    v[line] = 1
    return v
