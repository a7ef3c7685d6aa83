import itertools
import random

import pytest

from ppcalc import rings, ringsolve
from ppcalc.errors import RingFormatError
from ppcalc.rings import (RingMatrix, ZZ, ModularRing, TableRing,
                          left_annihilator, right_annihilator, regular_sets,
                          table_ring_from_dict, table_ring_to_dict)


def make_triangular8():
    # upper triangular 2x2 matrices over Z/2, encoded as (a, b, c) for
    # [[a, b], [0, c]]
    elems = list(itertools.product((0, 1), repeat=3))
    index = {e: i for i, e in enumerate(elems)}
    names = [f"m{a}{b}{c}" for a, b, c in elems]

    def add(x, y):
        return tuple((p + q) % 2 for p, q in zip(x, y))

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a * d) % 2, (a * e + b * f) % 2, (c * f) % 2)

    add_t = [[index[add(x, y)] for y in elems] for x in elems]
    mul_t = [[index[mul(x, y)] for y in elems] for x in elems]
    return TableRing(names, add_t, mul_t, index[(0, 0, 0)], index[(1, 0, 1)],
                     ring_name="T8")


def test_modular_ring_basics():
    r = ModularRing(6)
    assert r.add(4, 5) == 3
    assert r.mul(4, 5) == 2
    assert r.neg(2) == 4
    with pytest.raises(RingFormatError):
        ModularRing(1)


def test_table_ring_accepts_zmod_tables():
    n = 4
    names = [str(i) for i in range(n)]
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    ring = TableRing(names, add, mul, 0, 1)
    assert ring.commutative
    assert ring.sub(1, 3) == 2


def test_table_ring_rejects_broken_tables():
    n = 4
    names = [str(i) for i in range(n)]
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    bad_mul = [row[:] for row in mul]
    bad_mul[2][3] = 1  # breaks associativity/distributivity
    with pytest.raises(RingFormatError):
        TableRing(names, add, bad_mul, 0, 1)
    bad_add = [row[:] for row in add]
    bad_add[1][2] = bad_add[2][1] = 1
    with pytest.raises(RingFormatError):
        TableRing(names, bad_add, mul, 0, 1)


def test_triangular8_is_noncommutative():
    t8 = make_triangular8()
    assert not t8.commutative
    op = t8.opposite()
    assert op.mul(1, 2) == t8.mul(2, 1)
    assert op.opposite() is t8


def test_left_annihilator_examples():
    # Z, A = [2]: only 0 (no zero divisors)
    res = left_annihilator(RingMatrix.from_rows(ZZ, [[2]]))
    assert res.is_zero()
    # Z/6, A = [3]: {0, 2, 4}
    z6 = ModularRing(6)
    res = left_annihilator(RingMatrix.from_rows(z6, [[3]]))
    assert res.vectors == ((0,), (2,), (4,))
    # zero matrix: everything
    res = left_annihilator(RingMatrix.from_rows(z6, [[0]]))
    assert len(res) == 6
    res = left_annihilator(RingMatrix.from_rows(ZZ, [[0]]))
    assert res.contains([17])
    # identity: zero only
    res = left_annihilator(RingMatrix.identity(z6, 2))
    assert res.is_zero()


def test_right_annihilator_examples():
    z4 = ModularRing(4)
    res = right_annihilator(RingMatrix.from_rows(z4, [[2]]))
    assert res.vectors == ((0,), (2,))
    res = right_annihilator(RingMatrix.from_rows(ZZ, [[5]]))
    assert res.is_zero()
    # Z/6, A = [[2],[3]] (2x1): 2t = 0 and 3t = 0 force t = 0
    z6 = ModularRing(6)
    res = right_annihilator(RingMatrix.from_rows(z6, [[2], [3]]))
    assert res.vectors == ((0,),)


def test_annihilator_membership_is_exact():
    rng = random.Random(3)
    z6 = ModularRing(6)
    for _ in range(20):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        mat = RingMatrix.from_rows(
            z6, [[rng.randrange(6) for _ in range(n)] for _ in range(m)])
        ann = left_annihilator(mat)
        members = set(ann.vectors)
        for v in itertools.product(range(6), repeat=m):
            prod = rings._vec_mat_ring(z6, v, mat)
            assert (prod == (0,) * n) == (v in members)


def test_regular_sets():
    assert regular_sets(ModularRing(4)).s_left == (1, 3)
    assert regular_sets(ModularRing(6)).s_reg == (1, 5)
    assert regular_sets(ZZ).s_left == "nonzero"
    t8 = make_triangular8()
    rs = regular_sets(t8)
    # in T8 the regular elements are exactly the units (invertible
    # triangular matrices: a = c = 1)
    unit_indices = {i for i, nm in enumerate(t8.names) if nm[1] == "1" and nm[3] == "1"}
    assert set(rs.s_reg) == unit_indices


def test_injectivity_reformulation_of_s_left():
    # r in S_left iff x -> x*r is injective on R (finite rings)
    for ring in (ModularRing(6), ModularRing(8), make_triangular8()):
        rs = regular_sets(ring)
        for r in ring.elements():
            images = {ring.mul(t, r) for t in ring.elements()}
            assert (len(images) == ring.size) == (r in rs.s_left)


def test_ring_file_roundtrip(tmp_path):
    t8 = make_triangular8()
    data = table_ring_to_dict(t8)
    again = table_ring_from_dict(data)
    assert again.mul_table == t8.mul_table
    assert again.add_table == t8.add_table
    path = tmp_path / "t8.json"
    import json
    path.write_text(json.dumps(data))
    loaded = rings.load_ring_file(path)
    assert loaded.mul_table == t8.mul_table


def test_additive_coords_roundtrip():
    for ring in (ModularRing(12), make_triangular8()):
        ac = ringsolve.coords_for(ring)
        for a in ring.elements():
            assert ac.element(ac.coords(a)) == a
        # coords are additive
        for a in ring.elements():
            for b in ring.elements():
                ca, cb = ac.coords(a), ac.coords(b)
                csum = tuple((x + y) % d for x, y, d in zip(ca, cb, ac.moduli))
                assert csum == ac.coords(ring.add(a, b))


def test_additive_coords_multiplication_matrices():
    t8 = make_triangular8()
    ac = ringsolve.coords_for(t8)
    from ppcalc import intlin
    for r in t8.elements():
        lm = ac.left_matrix(r)
        rm = ac.right_matrix(r)
        for a in t8.elements():
            ca = list(ac.coords(a))
            left = tuple(x % d for x, d in zip(intlin.mat_vec(lm, ca), ac.moduli))
            right = tuple(x % d for x, d in zip(intlin.mat_vec(rm, ca), ac.moduli))
            assert left == ac.coords(t8.mul(r, a))
            assert right == ac.coords(t8.mul(a, r))


def test_solve_ring_linear_agrees_with_brute_force():
    rng = random.Random(11)
    for ring in (ModularRing(6), make_triangular8()):
        elems = list(ring.elements())
        for _ in range(60):
            n_unk = rng.randint(1, 2)
            n_eq = rng.randint(1, 2)
            eqs = []
            for _ in range(n_eq):
                terms = []
                for u in range(n_unk):
                    side = rng.choice((ringsolve.LEFT, ringsolve.RIGHT))
                    terms.append((u, side, rng.choice(elems)))
                eqs.append((terms, rng.choice(elems)))

            def satisfied(assign):
                for terms, rhs in eqs:
                    acc = ring.zero
                    for u, side, c in terms:
                        prod = ring.mul(c, assign[u]) if side == "l" \
                            else ring.mul(assign[u], c)
                        acc = ring.add(acc, prod)
                    if acc != rhs:
                        return False
                return True

            brute = any(satisfied(v)
                        for v in itertools.product(elems, repeat=n_unk))
            sol = ringsolve.solve_ring_linear(ring, n_unk, eqs)
            assert (sol is not None) == brute
            if sol is not None:
                assert satisfied(sol)
