import random

import pytest
from hypothesis import given, settings, strategies as st

from ppcalc import intlin


def small_matrix(max_dim=4, lo=-30, hi=30):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                min_size=m, max_size=m)))


def det(mat):
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * det(minor)
    return total


def test_xgcd_basics():
    assert intlin.xgcd(0, 0) == (0, 1, 0)
    for a, b in [(12, 18), (-4, 6), (7, 0), (0, -5), (1, 1)]:
        g, s, t = intlin.xgcd(a, b)
        assert g >= 0
        assert g == s * a + t * b


@given(small_matrix())
@settings(max_examples=150, deadline=None)
def test_hnf_is_canonical_basis(mat):
    width = len(mat[0])
    h = intlin.hnf(mat, width)
    # same row span both ways
    for row in mat:
        assert intlin.lat_member(h, row)
    for row in h:
        assert intlin.lat_member(mat, row)
    # canonical: shuffled generators give identical output
    shuffled = mat[::-1] + [[x + y for x, y in zip(mat[0], mat[-1])]]
    assert intlin.hnf(shuffled, width) == h
    # idempotent
    assert intlin.hnf(h, width) == h


@given(small_matrix())
@settings(max_examples=150, deadline=None)
def test_snf_diagonalizes_with_unimodular_transforms(mat):
    res = intlin.snf(mat)
    m, n = len(mat), len(mat[0])
    prod = intlin.mat_mul(intlin.mat_mul(res.u, mat), res.v)
    for i in range(m):
        for j in range(n):
            expected = res.diag[i] if i == j and i < len(res.diag) else 0
            assert prod[i][j] == expected
    assert det(res.u) in (1, -1)
    assert det(res.v) in (1, -1)
    assert intlin.mat_mul(res.v, res.vinv) == intlin.identity(n)
    nonzero = [d for d in res.diag if d]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


@given(small_matrix())
@settings(max_examples=100, deadline=None)
def test_snf_invariant_factors_match_sympy(mat):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    res = intlin.snf(mat)
    s = smith_normal_form(sympy.Matrix(mat))
    ours = sorted(abs(d) for d in res.diag if d)
    theirs = sorted(abs(s[i, i]) for i in range(min(s.shape)) if s[i, i])
    assert ours == theirs


@given(small_matrix(), st.integers(0, 10))
@settings(max_examples=150, deadline=None)
def test_solve_returns_actual_solutions(mat, seed):
    rng = random.Random(seed)
    n = len(mat[0])
    x0 = [rng.randint(-5, 5) for _ in range(n)]
    b = intlin.mat_vec(mat, x0)
    x = intlin.solve(mat, b)
    assert x is not None
    assert intlin.mat_vec(mat, x) == b


def test_solve_detects_unsolvable():
    assert intlin.solve([[2]], [1]) is None
    assert intlin.solve([[2, 4], [1, 2]], [2, 0]) is None
    assert intlin.solve([[0]], [3]) is None


def test_solve_mod():
    # 3x == 1 (mod 5) has x == 2
    x = intlin.solve_mod([[3]], [1], [5])
    assert x is not None and (3 * x[0] - 1) % 5 == 0
    # 2x == 1 (mod 4) unsolvable
    assert intlin.solve_mod([[2]], [1], [4]) is None
    # mixed moduli: x == 1 (mod 2), x == 0 exactly -> unsolvable
    assert intlin.solve_mod([[1], [1]], [1, 0], [2, 0]) is None


def test_solve_mod_prime_matches_solve_mod():
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice([2, 3, 5])
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        mat = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
        rhs = [rng.randrange(p) for _ in range(m)]
        fast = intlin.solve_mod_prime(mat, rhs, p)
        slow = intlin.solve_mod(mat, rhs, [p] * m)
        assert (fast is None) == (slow is None)
        if fast is not None:
            assert all((sum(a * x for a, x in zip(row, fast)) - b) % p == 0
                       for row, b in zip(mat, rhs))


@given(small_matrix())
@settings(max_examples=100, deadline=None)
def test_kernel(mat):
    width = len(mat[0])
    ker = intlin.kernel(mat, width)
    for row in ker:
        assert not any(intlin.mat_vec(mat, row))
    # dimension check: rank + nullity
    rank = intlin.snf(mat).rank
    assert len(ker) == width - rank


def test_lattice_ops():
    width = 2
    l1 = intlin.hnf([[2, 0], [0, 2]], width)
    l2 = intlin.hnf([[3, 0], [0, 3]], width)
    inter = intlin.lat_intersect(l1, l2, width)
    assert intlin.lat_eq(inter, [[6, 0], [0, 6]], width)
    total = intlin.lat_sum(l1, l2, width)
    assert intlin.lat_eq(total, [[1, 0], [0, 1]], width)
    assert intlin.lat_member(l1, [4, 6])
    assert not intlin.lat_member(l1, [1, 0])
    assert intlin.lat_contains(total, l1)
    assert not intlin.lat_contains(l1, total)


def test_lat_project():
    lat = [[2, 3, 1], [0, 4, 0]]
    proj = intlin.lat_project(lat, [0, 1], 2)
    assert intlin.lat_eq(proj, [[2, 3], [0, 4]], 2)


def test_quotient_invariants():
    # Z^2 / <(2,0),(0,4)> = Z/2 + Z/4
    free, div = intlin.quotient_invariants(
        intlin.identity(2), [[2, 0], [0, 4]], 2)
    assert free == 0 and div == [2, 4]
    # Z^2 / <(2,0)> = Z/2 + Z
    free, div = intlin.quotient_invariants(intlin.identity(2), [[2, 0]], 2)
    assert free == 1 and div == [2]
    free, div = intlin.quotient_invariants(intlin.identity(3), [], 3)
    assert free == 3 and div == []
