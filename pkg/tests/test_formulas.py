import random

import pytest

from ppcalc.errors import ArityError, SideError
from ppcalc.formulas import (annihilation, divisibility, dual,
                             enumerate_unary_formulas, gamma_subscript,
                             gamma_superscript, inverse, join, make_formula,
                             meet, multiple, random_formula, true_formula,
                             zero_formula)
from ppcalc.lattice import equiv, implies
from ppcalc.modules import cyclic_product_module, regular_module
from ppcalc.parser import parse_formula
from ppcalc.rings import ModularRing, ZZ
from ppcalc.semantics import evaluate

z4 = ModularRing(4)
z6 = ModularRing(6)
z8 = ModularRing(8)


def test_canonicalization_drops_zero_rows():
    phi = make_formula(z4, "left", [[0, 0], [1, 2]], [[0], [3]], k=2)
    assert phi.eq_count == 1
    assert phi.a.entries == ((1, 2),)
    # all rows zero collapses to the true formula
    phi = make_formula(z4, "left", [[0], [0]], [[0], [0]], k=1)
    assert phi == true_formula(z4)


def test_sizes():
    assert true_formula(z4).size() == 2  # m + n with no nonzeros
    assert parse_formula("2|x", z4).size() == 5
    assert parse_formula("2 x = 0", z4).size() == 3


def test_dual_shapes_and_spec_examples():
    # dual of r|x is equivalent to the annihilator x r = 0 on the right
    d = dual(divisibility(ZZ, 2))
    assert d.side == "right"
    ann_right = annihilation(ZZ, 2, side="right")
    assert equiv(d, ann_right)
    # dual of s x = 0 is equivalent to right divisibility s|x
    d = dual(annihilation(ZZ, 3))
    assert equiv(d, divisibility(ZZ, 3, side="right"))
    # dual swaps top and bottom
    assert equiv(dual(true_formula(z6)), zero_formula(z6, side="right"))
    assert equiv(dual(zero_formula(z6)), true_formula(z6, side="right"))


def test_dual_preserves_arity():
    rng = random.Random(0)
    for _ in range(20):
        phi = random_formula(z6, rng)
        assert dual(phi).arity == phi.arity
        assert dual(dual(phi)).side == phi.side


def test_multiple_examples():
    # r = 1 gives phi back, r = 0 gives x = 0
    phi = parse_formula("2 x = 0", z4)
    assert equiv(multiple(1, phi), phi)
    assert equiv(multiple(0, phi), zero_formula(z4))
    # over Z/4: 2 * (x = x) is equivalent to 2|x, checked on both
    # separating modules
    two_top = multiple(2, true_formula(z4))
    div2 = parse_formula("2|x", z4)
    assert equiv(two_top, div2)
    for mod in (regular_module(z4), cyclic_product_module(z4, [2, 4])):
        assert evaluate(two_top, mod) == evaluate(div2, mod)


def test_inverse_examples():
    phi = parse_formula("4|x", z8)
    assert equiv(inverse(1, phi), phi)
    # {a : 2a in 4 Z/8} = {0, 2, 4, 6}
    value = evaluate(inverse(2, phi), regular_module(z8))
    assert value.elements == ((0,), (2,), (4,), (6,))
    # inverse of x = 0 is the annihilator rx = 0
    assert equiv(inverse(3, zero_formula(z6)), annihilation(z6, 3))


def test_meet_join_lattice_identities():
    rng = random.Random(1)
    for ring in (z4, z6):
        for _ in range(10):
            phi = random_formula(ring, rng)
            assert equiv(meet(phi, true_formula(ring)), phi)
            assert equiv(join(phi, zero_formula(ring)), phi)


def test_meet_join_spec_examples():
    # over Z/4: join(2|x, 2x = 0) is 2x = 0 since 2|x <= 2x = 0
    j = join(parse_formula("2|x", z4), parse_formula("2 x = 0", z4))
    assert equiv(j, parse_formula("2 x = 0", z4))
    # over Z: meet(2|x, 3|x) is 6|x
    m = meet(parse_formula("2|x", ZZ), parse_formula("3|x", ZZ))
    assert equiv(m, parse_formula("6|x", ZZ))


def test_mismatch_errors():
    with pytest.raises(SideError):
        meet(parse_formula("2|x", z4), parse_formula("2|x", z6))
    with pytest.raises(SideError):
        meet(parse_formula("2|x", z4), parse_formula("2|x", z4, side="right"))
    with pytest.raises(ArityError):
        multiple(2, parse_formula("[1]|[1,1](x1,x2)", z4))


def test_gamma_trivial_and_qf():
    top = true_formula(z4)
    phi = parse_formula("2|x", z4)
    assert equiv(gamma_superscript(phi, top), phi)
    # quantifier-free formulas: superscript equals subscript
    qf = parse_formula("2 x = 0", z4)
    gamma = parse_formula("2|x", z4)
    assert equiv(gamma_superscript(qf, gamma), gamma_subscript(qf, gamma))


def test_gamma_superscript_constrains_witnesses():
    # (2|x)^(2x=0) asks for a witness y with 2y = x and 2y = 0, which
    # forces x = 0 in Z/4 (brute-force oracle below)
    phi = parse_formula("2|x", z4)
    gamma = parse_formula("2 x = 0", z4)
    sup = gamma_superscript(phi, gamma)
    oracle = sorted(
        (x,) for x in range(4)
        if any(2 * y % 4 == x and (2 * x) % 4 == 0 and (2 * y) % 4 == 0
               for y in range(4)))
    assert list(evaluate(sup, regular_module(z4)).elements) == oracle
    assert oracle == [(0,)]


def test_enumerate_unary_formulas_size_bound():
    for bound in (3, 4):
        for phi in enumerate_unary_formulas(z6, bound):
            assert phi.size() <= bound
    keys = [phi.key() for phi in enumerate_unary_formulas(z6, 4)]
    assert len(keys) == len(set(keys))
    # the true and zero formulas are present
    assert true_formula(z6).key() in keys
    assert zero_formula(z6).key() in keys
