import random

import pytest

from ppcalc.corpus import triangular_ring_z2
from ppcalc.errors import FormulaParseError, RingFormatError
from ppcalc.formulas import random_formula, true_formula
from ppcalc.parser import formula_to_text, parse_formula
from ppcalc.rings import ModularRing, ZZ

z4 = ModularRing(4)


def test_basic_forms():
    phi = parse_formula("2|x", ZZ)
    assert phi.a.entries == ((2,),) and phi.b.entries == ((1,),)
    phi = parse_formula("2 x = 0", z4)
    assert phi.witness_arity == 0 and phi.b.entries == ((2,),)
    phi = parse_formula("x = x", z4)
    assert phi == true_formula(z4)
    phi = parse_formula("x = 0", z4)
    assert phi.b.entries == ((1,),) and phi.witness_arity == 0
    phi = parse_formula("-3|5 x", ZZ)
    assert phi.a.entries == ((-3,),) and phi.b.entries == ((5,),)


def test_matrix_form():
    phi = parse_formula("[1,2;0,3]|[1;2] x", z4)
    assert phi.eq_count == 2 and phi.witness_arity == 2
    assert phi.a.entries == ((1, 2), (0, 3))
    phi = parse_formula("[]|[2] x", z4)
    assert phi.witness_arity == 0
    phi = parse_formula("[1;1]|[1,0;0,1](x1,x2)", z4)
    assert phi.arity == 2


def test_connectives_expand():
    from ppcalc.lattice import equiv
    phi = parse_formula("2|x & 3|x", ZZ)
    assert equiv(phi, parse_formula("6|x", ZZ))
    psi = parse_formula("(2|x + 3|x)", ZZ)
    assert equiv(psi, parse_formula("1|x", ZZ))


def test_errors_carry_positions():
    with pytest.raises(FormulaParseError) as info:
        parse_formula("2|", z4)
    assert info.value.position is not None
    with pytest.raises(FormulaParseError):
        parse_formula("x = y", z4)
    with pytest.raises(FormulaParseError):
        parse_formula("2|x &", z4)
    with pytest.raises(FormulaParseError):
        parse_formula("[1,2;3]|[1] x", z4)
    with pytest.raises(FormulaParseError):
        parse_formula("7q|x", z4)


def test_table_ring_scalars():
    t8 = triangular_ring_z2()
    phi = parse_formula("m010|x", t8)
    assert phi.a.entries[0][0] == t8.element_from_token("m010")
    with pytest.raises(RingFormatError):
        parse_formula("nope|x", t8)


def test_roundtrip_random():
    rng = random.Random(7)
    t8 = triangular_ring_z2()
    for ring in (ZZ, z4, ModularRing(9), t8):
        for _ in range(60):
            phi = random_formula(ring, rng)
            text = formula_to_text(phi)
            assert parse_formula(text, ring).key() == phi.key(), text
        for _ in range(20):
            phi = random_formula(ring, rng, side="right")
            text = formula_to_text(phi)
            assert parse_formula(text, ring, side="right").key() == phi.key()


def test_print_sugar():
    assert formula_to_text(parse_formula("2|x", z4)) == "2|x"
    assert formula_to_text(parse_formula("2 x = 0", z4)) == "2 x = 0"
    assert formula_to_text(parse_formula("x = x", z4)) == "x = x"
    assert formula_to_text(parse_formula("x = 0", z4)) == "x = 0"
