import random

import pytest

from ppcalc.errors import SideError
from ppcalc.formulas import join, meet, multiple, random_formula
from ppcalc.lattice import implies
from ppcalc.modules import (FgAbelianModule, cyclic_product_module,
                            explicit_subgroup, module_from_shorthand,
                            regular_fg_module, regular_module,
                            submodule_as_module)
from ppcalc.parser import parse_formula
from ppcalc.rings import ModularRing, ZZ
from ppcalc.semantics import (abspure_defect, evaluate, flat_defect,
                              free_realization, holds_at, is_divisible,
                              is_pure_submodule)

z4 = ModularRing(4)
z6 = ModularRing(6)


def test_evaluate_chain_on_z4():
    reg = regular_module(z4)
    values = [evaluate(parse_formula(t, z4), reg).elements
              for t in ("x = 0", "2|x", "2 x = 0", "x = x")]
    assert values == [((0,),), ((0,), (2,)), ((0,), (2,)),
                      ((0,), (1,), (2,), (3,))]


def test_evaluate_separator_module():
    mod = cyclic_product_module(z4, [2, 4])
    values = [len(evaluate(parse_formula(t, z4), mod))
              for t in ("x = 0", "2|x", "2 x = 0", "x = x")]
    assert values == [1, 2, 4, 8]


def test_evaluate_top_is_everything():
    mod = cyclic_product_module(z6, [2, 3])
    top = parse_formula("x = x", z6)
    assert evaluate(top, mod).is_all()


def test_side_mismatch_rejected():
    with pytest.raises(SideError):
        evaluate(parse_formula("2|x", z4, side="right"), regular_module(z4))


def test_evaluate_fg_abelian():
    m = module_from_shorthand("Z/2 + Z/4", ZZ)
    phi = parse_formula("2|x", ZZ)
    sub = evaluate(phi, m)
    free, div = sub.invariants()
    assert (free, div) == (0, [2])
    # join and meet turn into sum and intersection of lattices
    psi = parse_formula("2 x = 0", ZZ)
    assert evaluate(meet(phi, psi), m).basis == \
        _intersect(evaluate(phi, m), evaluate(psi, m))
    # x = x on Z gives the full lattice
    z = regular_fg_module()
    assert evaluate(parse_formula("x = x", ZZ), z).is_all()
    assert evaluate(parse_formula("2 x = 0", ZZ), z).is_zero()


def _intersect(s1, s2):
    from ppcalc import intlin
    width = s1.width()
    return tuple(tuple(r) for r in intlin.lat_intersect(
        [list(r) for r in s1.basis], [list(r) for r in s2.basis], width))


def test_free_realization_spec_examples():
    # x = 0 realizes in the zero module
    mod, point = free_realization(parse_formula("x = 0", z4))
    assert mod.size == 1
    # 2|x over Z realizes in Z at the element 2
    mod, point = free_realization(parse_formula("2|x", ZZ))
    assert mod.rank == 1 and mod.divisors == []
    assert abs(point[0][0]) == 2
    # 2x = 0 over Z realizes in Z/2 at the generator
    mod, point = free_realization(parse_formula("2 x = 0", ZZ))
    assert mod.rank == 0 and mod.divisors == [2]


def test_free_realization_contract():
    rng = random.Random(4)
    for ring in (z4, z6):
        for _ in range(25):
            phi = random_formula(ring, rng)
            psi = random_formula(ring, rng)
            mod, point = free_realization(phi)
            assert holds_at(phi, mod, point)
            assert holds_at(psi, mod, point) == implies(phi, psi)


def test_flat_defect():
    reg = regular_module(z4)
    m2 = cyclic_product_module(z4, [2])
    # regular module never has a defect
    for text in ("x = x", "2|x", "2 x = 0", "x = 0"):
        value, prod = flat_defect(parse_formula(text, z4), reg)
        assert value == prod
    # Z/2 over Z/4 at 2x = 0: value is everything, the product is 0
    value, prod = flat_defect(parse_formula("2 x = 0", z4), m2)
    assert value.is_all() and prod.is_zero()
    # the product side is always contained in the value side
    rng = random.Random(8)
    for _ in range(20):
        phi = random_formula(z4, rng)
        value, prod = flat_defect(phi, m2)
        assert set(prod.elements) <= set(value.elements)


def test_abspure_defect():
    reg = regular_module(z4)
    m2 = cyclic_product_module(z4, [2])
    for text in ("x = x", "2|x", "2 x = 0", "x = 0"):
        value, ann = abspure_defect(parse_formula(text, z4), reg)
        assert value == ann
    value, ann = abspure_defect(parse_formula("2|x", z4), m2)
    assert value.is_zero() and ann.is_all()
    rng = random.Random(9)
    for _ in range(20):
        phi = random_formula(z4, rng)
        value, ann = abspure_defect(phi, m2)
        assert set(value.elements) <= set(ann.elements)


def test_is_divisible():
    assert is_divisible(regular_module(z4)) == (True, None)
    ok, witness = is_divisible(cyclic_product_module(z4, [2]))
    assert not ok and witness == (2, 1)
    zero = FgAbelianModule(0, [])
    assert is_divisible(zero) == (True, None)


def test_is_pure_submodule():
    reg = regular_module(z4)
    full = explicit_subgroup(reg, [(a,) for a in range(4)], 1)
    assert is_pure_submodule(full, 5) == ("pure", 5)
    two = explicit_subgroup(reg, [(0,), (2,)], 1)
    verdict, detail = is_pure_submodule(two, 5)
    assert verdict == "counterexample" and str(detail) == "2|x"
    # a direct summand is pure
    m24 = cyclic_product_module(z4, [2, 4])
    names = {nm: i for i, nm in enumerate(m24.names)}
    summand = explicit_subgroup(
        m24, [(names["(0,0)"],), (names["(1,0)"],)], 1)
    assert is_pure_submodule(summand, 5)[0] == "pure"


def test_submodule_as_module_closure_check():
    reg = regular_module(z6)
    sub = explicit_subgroup(reg, [(0,), (2,), (4,)], 1)
    inner = submodule_as_module(sub)
    assert inner.size == 3
    from ppcalc.errors import ModuleFormatError
    not_closed = explicit_subgroup(reg, [(0,), (1,)], 1)
    with pytest.raises(ModuleFormatError):
        submodule_as_module(not_closed)


def test_multiple_evaluation_law():
    rng = random.Random(10)
    mod = cyclic_product_module(z6, [6])
    for _ in range(15):
        phi = random_formula(z6, rng)
        r = z6.random_element(rng)
        lhs = {e[0] for e in evaluate(multiple(r, phi), mod).elements}
        rhs = {mod.act(r, e[0]) for e in evaluate(phi, mod).elements}
        assert lhs == rhs
