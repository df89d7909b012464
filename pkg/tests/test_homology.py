import itertools
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from roundtwin import _kernels
from roundtwin.complex import SpaceSpec, build_complex, faces
from roundtwin.homology import (
    BoundaryError,
    _snf_exact,
    boundary_matrix,
    check_boundary_squared,
    homology,
    homology_report,
    smith_normal_form,
)


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = (-1) ** inversions
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def determinantal_divisors(m):
    """gcd of all k x k minors, for each k, by brute force."""
    rows, cols = len(m), len(m[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = math.gcd(g, leibniz_det([[m[i][j] for j in ci] for i in ri]))
        out.append(g)
    return out


def test_snf_small_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == ()
    assert smith_normal_form(np.zeros((3, 0), dtype=np.int64)).diagonal == ()
    assert smith_normal_form([[4, 6]]).diagonal == (2,)


@pytest.mark.parametrize("seed", range(40))
def test_snf_minor_gcd_oracle(seed):
    rng = random.Random(seed)
    m = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(5)]
    diag = smith_normal_form(m).diagonal
    divisors = determinantal_divisors(m)
    rank = sum(1 for d in divisors if d)
    assert len(diag) == rank
    for k in range(1, rank + 1):
        assert math.prod(diag[:k]) == divisors[k - 1]


def random_unimodular(rng, n, steps=12):
    u = np.eye(n, dtype=object)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            u[i] += rng.randint(-2, 2) * u[j]
        if rng.random() < 0.3:
            u[i] = -u[i]
    return u


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2**32))
def test_snf_unimodular_invariance(rows, cols, seed):
    rng = random.Random(seed)
    a = np.array([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)], dtype=object)
    b = random_unimodular(rng, rows).dot(a).dot(random_unimodular(rng, cols))
    assert smith_normal_form(a.tolist()) == smith_normal_form(b.tolist())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 60), min_size=1, max_size=5))
def test_snf_divisibility_chain(entries):
    diag = smith_normal_form(np.diag(entries).astype(np.int64)).diagonal
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert math.prod(diag) == math.prod(entries)


def test_snf_big_entries_exact():
    big = 10**30
    m = [[big, 0], [0, 3 * big]]
    assert smith_normal_form(m).diagonal == (big, 3 * big)


@pytest.mark.parametrize("use_numba", [False] + ([True] if _kernels.USING_NUMBA else []))
@pytest.mark.parametrize("seed", range(15))
def test_kernel_agrees_with_exact(seed, use_numba):
    rng = np.random.default_rng(seed)
    a = rng.integers(-2, 3, size=(rng.integers(1, 12), rng.integers(1, 12)))
    units, resid = _kernels.eliminate_unit_pivots(a, use_numba=use_numba)
    assert sorted([1] * units + _snf_exact(resid.tolist())) == sorted(_snf_exact(a.tolist()))


@pytest.mark.parametrize("use_numba", [False] + ([True] if _kernels.USING_NUMBA else []))
def test_kernel_stops_before_overflow(use_numba):
    # the pivot row multiplies a huge entry; the kernel must hand off exactly
    a = np.array([[1, 2**30], [2**30, 0]], dtype=np.int64)
    units, resid = _kernels.eliminate_unit_pivots(a, use_numba=use_numba)
    assert units == 1
    assert resid.tolist() == [[-(2**60)]]
    assert smith_normal_form(a).diagonal == (1, 2**60)


def test_kernels_agree_on_boundary_matrix():
    if not _kernels.USING_NUMBA:
        pytest.skip("numba unavailable")
    m = boundary_matrix(build_complex(SpaceSpec.line(5)), 2)
    u1, r1 = _kernels.eliminate_unit_pivots(m, use_numba=True)
    u2, r2 = _kernels.eliminate_unit_pivots(m, use_numba=False)
    assert u1 == u2 and not r1.any() and not r2.any()


def test_boundary_q2_is_zero():
    m = boundary_matrix(build_complex(SpaceSpec.round(2)), 1)
    assert m.shape == (1, 1) and m[0, 0] == 0


def test_boundary_shapes():
    q6 = build_complex(SpaceSpec.round(6))
    assert boundary_matrix(q6, 3).shape == (270, 30)
    assert boundary_matrix(q6, 4).shape == (30, 0)
    with pytest.raises(ValueError):
        boundary_matrix(q6, 0)


def test_q4_squares_have_four_edges():
    m = boundary_matrix(build_complex(SpaceSpec.round(4)), 2)
    assert (np.count_nonzero(m, axis=0) == 4).all()
    assert set(np.unique(m)) <= {-1, 0, 1}


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(2, 7))
def test_boundary_squared_zero(kind, n):
    cx = build_complex(SpaceSpec(kind, n))
    for k in range(1, cx.dimension):
        assert not (boundary_matrix(cx, k) @ boundary_matrix(cx, k + 1)).any()


def test_bad_signs_detected():
    cx = build_complex(SpaceSpec.round(4))
    d1, d2 = boundary_matrix(cx, 1), boundary_matrix(cx, 2)
    check_boundary_squared([d1, d2])
    with pytest.raises(BoundaryError):
        check_boundary_squared([d1, np.abs(d2)])


@pytest.mark.parametrize("kind,n,betti", [
    ("round", 2, [1, 1]),
    ("round", 3, [1, 2]),
    ("round", 4, [1, 4, 0]),
    ("round", 5, [1, 8, 1]),
    ("round", 6, [1, 15, 14, 0]),
    ("line", 3, [1, 1]),
    ("line", 4, [1, 7, 0]),
    ("line", 5, [1, 31, 0]),
    ("line", 6, [1, 111, 20, 0]),
])
def test_homology_values(kind, n, betti):
    groups = homology(build_complex(SpaceSpec(kind, n)))
    assert [g.rank for g in groups] == betti
    assert all(g.torsion == () for g in groups)


@pytest.mark.parametrize("kind", ["round", "line"])
@pytest.mark.parametrize("n", range(1, 7))
def test_euler_from_homology(kind, n):
    cx = build_complex(SpaceSpec(kind, n))
    rep = homology_report(cx)
    assert rep["euler"] == sum((-1) ** k * c for k, c in enumerate(cx.counts))


def test_h0_counts_components():
    # M_2 is connected: the edge (12) joins 12 and 21
    cx = build_complex(SpaceSpec.line(2))
    assert homology(cx)[0].rank == 1
    assert {str(f) for f, _, _ in faces(cx.cells[1][0])} == {"12", "21"}


def test_homology_group_str():
    groups = homology(build_complex(SpaceSpec.round(5)))
    assert [str(g) for g in groups] == ["Z", "Z^8", "Z"]
