import random

import pytest

from ppcalc.corpus import triangular_ring_z2
from ppcalc.errors import ArityError, CapExceeded, SideError
from ppcalc.formulas import dual, meet, random_formula, true_formula
from ppcalc.lattice import (bounded_by_kernel, equiv, implies, presta_search,
                            presta_solve)
from ppcalc.parser import parse_formula
from ppcalc.rings import ModularRing, ZZ

z4 = ModularRing(4)
z6 = ModularRing(6)


def test_implies_examples():
    assert implies(parse_formula("4|x", ZZ), parse_formula("2|x", ZZ))
    assert not implies(parse_formula("2|x", ZZ), parse_formula("4|x", ZZ))
    assert implies(parse_formula("2|x", z4), parse_formula("2 x = 0", z4))
    assert not implies(parse_formula("2 x = 0", z4), parse_formula("2|x", z4))
    rng = random.Random(0)
    for _ in range(10):
        phi = random_formula(z6, rng)
        assert implies(parse_formula("x = 0", z6), phi)


def test_z4_chain_strict():
    chain = [parse_formula(t, z4)
             for t in ("x = 0", "2|x", "2 x = 0", "x = x")]
    for i, lo in enumerate(chain):
        for j, hi in enumerate(chain):
            assert implies(lo, hi) == (i <= j)


def test_equiv_examples():
    rng = random.Random(1)
    for ring in (z4, z6, ZZ):
        for _ in range(15):
            phi = random_formula(ring, rng)
            assert equiv(phi, meet(phi, true_formula(ring)))
            assert equiv(dual(dual(phi)), phi)


def test_presta_solvable_with_witnesses():
    ok, wit = presta_solve(parse_formula("4|x", ZZ), parse_formula("2|x", ZZ))
    assert ok and set(wit) == {"X", "Y", "Z"}
    ok, wit = presta_solve(parse_formula("2 x = 0", z4),
                           parse_formula("2|x", z4))
    assert not ok and wit is None
    phi = parse_formula("3|x", z6)
    ok, _ = presta_solve(phi, phi)
    assert ok


def test_presta_agrees_with_implies():
    rng = random.Random(2)
    t8 = triangular_ring_z2()
    for ring in (z4, z6, ModularRing(9), t8, ZZ):
        for _ in range(40):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            assert presta_solve(phi, psi)[0] == implies(phi, psi), \
                (str(phi), str(psi), ring)


def test_presta_search_fallback():
    rng = random.Random(3)
    for _ in range(40):
        phi, psi = random_formula(z4, rng), random_formula(z4, rng)
        try:
            got = presta_search(phi, psi, cap=300000)
        except CapExceeded:
            continue
        assert got == implies(phi, psi)
    with pytest.raises(CapExceeded):
        presta_search(parse_formula("2|x", ZZ), parse_formula("2|x", ZZ))


def test_bounded_by_kernel_examples():
    bounded, t, r = bounded_by_kernel(parse_formula("2 x = 0", ZZ))
    assert bounded and t == (1,) and r == 2
    bounded, t, r = bounded_by_kernel(parse_formula("2|x", ZZ))
    assert not bounded
    bounded, t, r = bounded_by_kernel(parse_formula("3|x", z6))
    assert bounded and t == (2,) and r == 2
    # witness validity: phi <= (r x = 0)
    assert implies(parse_formula("3|x", z6), parse_formula("2 x = 0", z6))


def test_mismatch_errors():
    with pytest.raises(SideError):
        implies(parse_formula("2|x", z4), parse_formula("2|x", z6))
    with pytest.raises(ArityError):
        implies(parse_formula("2|x", z4),
                parse_formula("[1]|[1,1](x1,x2)", z4))
    with pytest.raises(ArityError):
        bounded_by_kernel(parse_formula("[1]|[1,1](x1,x2)", z4))


def test_duality_order_reversal():
    rng = random.Random(4)
    for ring in (z4, z6, ZZ):
        for _ in range(25):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            assert implies(phi, psi) == implies(dual(psi), dual(phi))


def test_right_side_implication():
    phi = parse_formula("4|x", ZZ, side="right")
    psi = parse_formula("2|x", ZZ, side="right")
    assert implies(phi, psi) and not implies(psi, phi)
    t8 = triangular_ring_z2()
    rng = random.Random(5)
    for _ in range(20):
        phi = random_formula(t8, rng, side="right")
        psi = random_formula(t8, rng, side="right")
        assert presta_solve(phi, psi)[0] == implies(phi, psi)
