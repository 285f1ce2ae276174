import itertools

import numpy as np
import pytest

from fgldpc.field import subfield_elements
from fgldpc.geometry import (
    build_eg,
    build_pg,
    cyclic_classes,
    eg_lines_not_through_origin,
    incidence_vector,
    parallel_classes_2d,
)

EG_CASES = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 8), (3, 2), (3, 3), (3, 4), (4, 2)]
PG_CASES = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 8), (3, 2), (3, 3), (3, 4), (4, 2)]


def eg_counts(p, q):
    lines = q ** (p - 1) * (q**p - 1) // (q - 1)
    return q**p, lines, (q**p - 1) // (q - 1)


def pg_counts(p, q):
    points = (q ** (p + 1) - 1) // (q - 1)
    lines = sum(q**i for i in range(p)) * sum(q**i for i in range(p + 1)) // (q + 1)
    return points, lines, (q**p - 1) // (q - 1)


def incidence(lines, n_points):
    A = np.zeros((lines.shape[0], n_points), dtype=np.int64)
    np.put_along_axis(A, lines, 1, axis=1)
    return A


def check_linear_space(A, points_per_line, lines_per_point):
    """Rows are lines.  Any two points share exactly one line; any two lines meet at most once."""
    assert np.all(A.sum(axis=1) == points_per_line)
    assert np.all(A.sum(axis=0) == lines_per_point)
    pp = A.T @ A
    off = ~np.eye(pp.shape[0], dtype=bool)
    assert np.all(pp[off] == 1)
    ll = A @ A.T
    off = ~np.eye(ll.shape[0], dtype=bool)
    assert ll[off].max() <= 1


@pytest.mark.parametrize("p,q", EG_CASES)
def test_eg_incidence_properties(p, q):
    G = build_eg(p, q)
    n_pts, n_lines, per_point = eg_counts(p, q)
    assert (G.n_points, G.n_lines) == (n_pts, n_lines)
    A = incidence(G.lines, G.n_points)
    check_linear_space(A, q, per_point)
    # each line has q^(p-1) - 1 parallel lines (same direction, disjoint)
    ll = A @ A.T
    for i in range(G.n_lines):
        same = G.line_direction == G.line_direction[i]
        assert same.sum() - 1 == q ** (p - 1) - 1
        assert not ll[i, same & (np.arange(G.n_lines) != i)].any()


@pytest.mark.parametrize("p,q", [(2, 2), (2, 3), (2, 4), (3, 2), (2, 5)])
def test_eg_lines_match_pairwise_enumeration(p, q):
    """Independent construction: the line through a and b is {a + c (b - a)}."""
    G = build_eg(p, q)
    F = G.field
    sub = [F(int(x)) for x in subfield_elements(F, q)]
    index = {int(x): G.point_index(int(x)) for x in G.points}
    found = set()
    for a, b in itertools.combinations(G.points.tolist(), 2):
        A, B = F(a), F(b)
        pts = sorted(index[(A + c * (B - A)).value] for c in sub)
        found.add(tuple(pts))
    assert found == {tuple(l) for l in G.lines.tolist()}


@pytest.mark.parametrize("p,q,points,lines", [(2, 2, 4, 6), (2, 4, 16, 20), (3, 2, 8, 28)])
def test_eg_small_counts(p, q, points, lines):
    G = build_eg(p, q)
    assert (G.n_points, G.n_lines) == (points, lines)


@pytest.mark.parametrize("p,q,want", [(2, 4, 15), (3, 2, 21), (2, 8, 63), (2, 16, 255)])
def test_lines_avoiding_origin(p, q, want):
    G = build_eg(p, q)
    avoid = eg_lines_not_through_origin(G)
    assert avoid.size == want
    assert np.all(G.lines[avoid] != 0)
    assert np.all((G.lines == 0).any(axis=1) == G.passes_through_origin)


@pytest.mark.parametrize("p,q,n_classes,size", [(2, 4, 1, 15), (2, 16, 1, 255), (3, 2, 3, 7), (3, 4, 5, 63)])
def test_cyclic_classes(p, q, n_classes, size):
    G = build_eg(p, q)
    classes = cyclic_classes(G)
    assert [len(c) for c in classes] == [size] * n_classes
    n = G.n_points - 1
    for cls in classes:
        vecs = [incidence_vector(G.lines[li] - 1, n) for li in cls]
        # multiplication by alpha shifts the incidence vector right by one
        for k, v in enumerate(vecs):
            assert np.array_equal(np.roll(v, 1), vecs[(k + 1) % len(vecs)])


@pytest.mark.parametrize("q", [2, 4, 8, 16])
def test_parallel_classes(q):
    G = build_eg(2, q)
    classes = parallel_classes_2d(G)
    assert len(classes) == q + 1
    assert all(len(c) == q - 1 for c in classes)
    A = incidence(G.lines, G.n_points)
    ll = A @ A.T
    for i, ci in enumerate(classes):
        for j, cj in enumerate(classes):
            block = ll[np.ix_(ci, cj)]
            if i == j:
                assert np.array_equal(block, q * np.eye(q - 1, dtype=int))
            else:
                assert np.all(block == 1)


def test_parallel_classes_need_plane():
    with pytest.raises(ValueError):
        parallel_classes_2d(build_eg(3, 2))


@pytest.mark.parametrize("p,q", PG_CASES)
def test_pg_incidence_properties(p, q):
    G = build_pg(p, q)
    n_pts, n_lines, per_point = pg_counts(p, q)
    assert (G.n_points, G.n_lines) == (n_pts, n_lines)
    check_linear_space(incidence(G.lines, G.n_points), q + 1, per_point)


@pytest.mark.parametrize("p,q", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)])
def test_pg_lines_match_subspace_enumeration(p, q):
    """Independent construction: the points of span{x, y} over GF(q)."""
    G = build_pg(p, q)
    F = G.field
    sub = [F(int(x)) for x in subfield_elements(F, q)]
    n = G.n_points
    found = set()
    for i, j in itertools.combinations(range(n), 2):
        x, y = F.alpha ** i, F.alpha ** j
        pts = {(a * x + b * y).log % n for a in sub for b in sub if (a * x + b * y).value}
        found.add(tuple(sorted(pts)))
    assert found == {tuple(l) for l in G.lines.tolist()}


@pytest.mark.parametrize("p,q,points,lines,size", [(2, 2, 7, 7, 3), (2, 4, 21, 21, 5), (3, 2, 15, 35, 3)])
def test_pg_small_counts(p, q, points, lines, size):
    G = build_pg(p, q)
    assert (G.n_points, G.n_lines, G.lines.shape[1]) == (points, lines, size)


def test_incidence_vector():
    assert not incidence_vector([], 10).any()
    eg = build_eg(2, 4)
    assert incidence_vector(eg.lines[3], eg.n_points).sum() == 4
    pg = build_pg(2, 4)
    assert incidence_vector(pg.lines[3], pg.n_points).sum() == 5
    with pytest.raises(IndexError):
        incidence_vector([10], 10)


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_eg(1, 4)
    with pytest.raises(ValueError):
        build_eg(2, 6)
    with pytest.raises(ValueError):
        build_pg(2, 2**11)
