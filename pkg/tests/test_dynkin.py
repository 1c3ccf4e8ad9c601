from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbfix.dynkin import (
    DynkinType,
    build_root_lattice,
    enumerate_vectors,
    enumerate_vectors_naive,
    norm,
    norm_ball,
    parse_dynkin,
)

ALL_TYPES = (
    [DynkinType("A", r) for r in range(1, 9)]
    + [DynkinType("D", r) for r in range(4, 9)]
    + [DynkinType("E", r) for r in (6, 7, 8)]
)
SMALL_TYPES = [t for t in ALL_TYPES if t.rank <= 6]


def leading_minors(M):
    n = len(M)
    out = []
    for k in range(1, n + 1):
        A = [[Fraction(M[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for c in range(k):
            piv = next(r for r in range(c, k) if A[r][c] != 0)
            if piv != c:
                A[c], A[piv] = A[piv], A[c]
                det = -det
            det *= A[c][c]
            for r in range(c + 1, k):
                f = A[r][c] / A[c][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
        out.append(det)
    return out


@pytest.mark.parametrize(
    "family,rank", [("A", 0), ("D", 3), ("E", 5), ("E", 9), ("B", 2)]
)
def test_invalid_types_rejected(family, rank):
    with pytest.raises(ValueError):
        DynkinType(family, rank)


def test_parse_dynkin():
    assert parse_dynkin("A_3") == DynkinType("A", 3)
    assert parse_dynkin("e8") == DynkinType("E", 8)
    with pytest.raises(ValueError):
        parse_dynkin("X")


def test_small_examples():
    a1 = build_root_lattice(DynkinType("A", 1))
    assert (a1.gram, a1.dims, a1.group_order) == (((-2,),), (1,), 2)
    a2 = build_root_lattice(DynkinType("A", 2))
    assert (a2.gram, a2.dims, a2.group_order) == (((-2, 1), (1, -2)), (1, 1), 3)
    e6 = build_root_lattice(DynkinType("E", 6))
    assert sorted(e6.dims) == [1, 1, 2, 2, 2, 3] and e6.group_order == 24


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_gram_shape(t):
    L = build_root_lattice(t)
    edges = {frozenset(e) for e in t.edges()}
    for i in range(L.rank):
        for j in range(L.rank):
            if i == j:
                assert L.gram[i][j] == -2
            else:
                assert L.gram[i][j] == (1 if frozenset((i, j)) in edges else 0)
    assert all(m > 0 for m in leading_minors(L.cartan()))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_mckay_sum_of_squares(t):
    L = build_root_lattice(t)
    assert sum(d * d for d in L.dims) + 1 == L.group_order


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_mckay_cartan_characterization(t):
    # (C d)_j counts the edges from node j to the affine node; A_1 has a double one
    L = build_root_lattice(t)
    defect = [sum(c * d for c, d in zip(row, L.dims)) for row in L.cartan()]
    assert all(v >= 0 for v in defect)
    assert sum(defect) == (2 if t.family == "A" else 1)
    if t.rank > 1:
        assert set(defect) <= {0, 1}


def test_norm_examples():
    assert norm(build_root_lattice(DynkinType("A", 1)), (-1,)) == 1
    assert norm(build_root_lattice(DynkinType("A", 2)), (1, 1)) == 1
    assert norm(build_root_lattice(DynkinType("A", 3)), (-1, -1, -1)) == 1
    with pytest.raises(ValueError):
        norm(build_root_lattice(DynkinType("A", 3)), (1, 1))


def test_enumerate_examples():
    a1 = build_root_lattice(DynkinType("A", 1))
    vecs = enumerate_vectors(a1, (1, 2), 10)
    assert [v.exponent for v in vecs] == [0, 1, 3, 6, 10]
    assert sorted(v.m[0] for v in vecs) == [-2, -1, 0, 1, 2]
    a2 = build_root_lattice(DynkinType("A", 2))
    assert [v.exponent for v in enumerate_vectors(a2, (1, 3), 5)] == [0, 1, 2, 2, 4, 4, 5]


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_only_zero_at_bound_zero(t):
    # complete enumeration at E=0 is exactly positivity of t(m) on M \ {0}
    L = build_root_lattice(t)
    for s in (1, 2, 5):
        vecs = enumerate_vectors(L, (s, s * L.group_order), 0)
        assert [v.m for v in vecs] == [(0,) * L.rank]


def _positivity(t, Q):
    L = build_root_lattice(t)
    for m in norm_ball(L, Q):
        if any(m):
            assert L.dot_dims(m) + L.group_order * norm(L, m) >= 1, m


@pytest.mark.parametrize("t", SMALL_TYPES, ids=str)
def test_positivity_scan(t):
    _positivity(t, 10)


@pytest.mark.parametrize("t", [t for t in ALL_TYPES if t.rank > 6], ids=str)
def test_positivity_scan_high_rank(t):
    _positivity(t, 4)


@pytest.mark.slow
@pytest.mark.parametrize("t", [t for t in ALL_TYPES if t.rank > 6], ids=str)
def test_positivity_scan_high_rank_full(t):
    _positivity(t, 10)


def test_norm_ball_counts():
    # root counts and the start of the E_8 theta series
    assert len(norm_ball(build_root_lattice(DynkinType("E", 8)), 1)) == 241
    assert len(norm_ball(build_root_lattice(DynkinType("E", 8)), 2)) == 1 + 240 + 2160
    assert len(norm_ball(build_root_lattice(DynkinType("A", 2)), 1)) == 7


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_proportionality(t):
    L = build_root_lattice(t)
    for s in (1, 3):
        b = s * L.group_order
        for v in enumerate_vectors(L, (s, b), 3 * b):
            assert v.exponent == s * v.colength
            assert v.colength == L.dot_dims(v.m) + L.group_order * norm(L, v.m)


@pytest.mark.parametrize(
    "t,bound",
    [(DynkinType("A", r), 12) for r in range(1, 5)]
    + [(DynkinType("D", 4), 16), (DynkinType("D", 5), 12)],
    ids=str,
)
def test_matches_naive_box(t, bound):
    L = build_root_lattice(t)
    weight = (1, L.group_order)
    assert enumerate_vectors(L, weight, bound) == enumerate_vectors_naive(L, weight, bound)


@settings(max_examples=40, deadline=None)
@given(
    rank=st.integers(1, 3),
    s=st.integers(1, 4),
    b=st.integers(1, 6),
    bound=st.integers(0, 12),
)
def test_random_weights_match_naive(rank, s, b, bound):
    L = build_root_lattice(DynkinType("A", rank))
    assert enumerate_vectors(L, (s, b), bound) == enumerate_vectors_naive(L, (s, b), bound)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=4, max_size=4).filter(any))
def test_norm_positive_on_d4(m):
    assert norm(build_root_lattice(DynkinType("D", 4)), m) >= 1
