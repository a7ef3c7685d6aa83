"""The four-region classification of unary pp formulas.

A unary formula is low when it vanishes on the regular module, high when
its elementary dual vanishes on the regular module of the other side,
bounded when some nonzero scalar annihilates it everywhere, and
cobounded when some nonzero scalar multiple lands inside it everywhere.
Two dichotomies tie these together: high/bounded and low/cobounded are
complementary pairs, which the classifier verifies on every call by
computing the members independently (evaluation for high/low, the
kernel criterion for bounded).

Regions: N = high and cobounded, S = low and bounded, E = bounded and
cobounded, W* = high and low.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import intlin
from .errors import ArityError, UnsupportedRingError
from .formulas import LEFT, RIGHT, PpFormula, as_left, divisibility, dual
from .lattice import bounded_by_kernel
from .modules import regular_fg_module, regular_module
from .rings import (IntegerRing, RingMatrix, left_annihilator)
from .semantics import evaluate


@dataclass(frozen=True)
class FormulaClassification:
    high: bool
    low: bool
    bounded: bool
    cobounded: bool
    region: str  # one of "N", "S", "E", "W*"
    bound_witness: object  # r with phi <= (rx = 0), when bounded
    cobound_witness: object  # s with (s|x) <= phi, when cobounded

    def to_dict(self, ring):
        name = ring.element_name
        return {
            "high": self.high,
            "low": self.low,
            "bounded": self.bounded,
            "cobounded": self.cobounded,
            "region": self.region,
            "bound_witness": None if self.bound_witness is None
            else name(self.bound_witness),
            "cobound_witness": None if self.cobound_witness is None
            else name(self.cobound_witness),
        }


def _region(high, low, bounded, cobounded):
    if high and low:
        return "W*"
    if high and cobounded:
        return "N"
    if low and bounded:
        return "S"
    return "E"


class DichotomyViolation(AssertionError):
    """Raised when the two independent computations disagree.

    This cannot happen for a correct implementation; it is kept as a
    loud invariant check rather than silently trusting either side.
    """


def _regular_value(phi: PpFormula):
    """phi evaluated on the regular module of its own side."""
    ring = phi.ring
    if isinstance(ring, IntegerRing):
        sub = evaluate(as_left(phi), regular_fg_module())
        gen = abs(sub.basis[0][0]) if sub.basis else 0
        return gen  # the ideal's nonnegative generator
    lphi = as_left(phi)
    reg = regular_module(lphi.ring, LEFT)
    return evaluate(lphi, reg)


def _value_is_zero(value, ring):
    if isinstance(ring, IntegerRing):
        return value == 0
    return value.is_zero()


def _least_nonzero(value, ring):
    if isinstance(ring, IntegerRing):
        return value if value else None
    for v in value.elements:
        if v[0] != ring.zero:
            return v[0]
    return None


def classify(phi: PpFormula) -> FormulaClassification:
    """Classify a unary formula into the four regions.

    low and cobounded come from the value on the regular module; high
    comes from the dual's value on the regular module of the other side;
    bounded comes independently from the kernel criterion, and the
    high/bounded dichotomy is asserted to hold.
    """
    if phi.arity != 1:
        raise ArityError("classification applies to unary formulas")
    own_value = _regular_value(phi)
    low = _value_is_zero(own_value, phi.ring)
    cobounded = not low
    cobound_witness = _least_nonzero(own_value, phi.ring)
    dual_value = _regular_value(dual(phi))
    high = _value_is_zero(dual_value, phi.ring)
    bounded, _t, bound_witness = bounded_by_kernel(phi)
    if bounded == high:
        raise DichotomyViolation(
            f"high={high} and bounded={bounded} for {phi}")
    return FormulaClassification(
        high=high, low=low, bounded=bounded, cobounded=cobounded,
        region=_region(high, low, bounded, cobounded),
        bound_witness=bound_witness, cobound_witness=cobound_witness)


# ---------------------------------------------------------------------------
# ring-theoretic criteria (independent of evaluation)

@dataclass(frozen=True)
class CriteriaVerdict:
    bounded: bool
    high: bool
    low: bool
    cobounded: bool
    clauses: tuple  # which special-case clauses of the RD table fired


def proposition_criteria(phi: PpFormula) -> CriteriaVerdict:
    """The four ring-theoretic criteria for a unary A|bx.

    bounded:   left-ann(A) not contained in left-ann(b)
    high:      left-ann(A) contained in left-ann(b)
    low:       bR meets A R^k only in 0, and right-ann(b) = 0
    cobounded: b r lies in A R^k for some nonzero r
    """
    if phi.arity != 1:
        raise ArityError("criteria apply to unary formulas")
    lphi = as_left(phi)
    ring = lphi.ring
    a, b = lphi.a, lphi.b
    if isinstance(ring, IntegerRing):
        return _criteria_int(lphi)
    ann_a = left_annihilator(a)
    b_col = [b.entries[i][0] for i in range(b.rows)]
    contained = all(
        _dot(ring, t, b_col) == ring.zero for t in ann_a.vectors)
    high = contained
    bounded = not contained
    image = set()
    for v in itertools.product(ring.elements(), repeat=a.cols):
        image.add(tuple(_dot(ring, a.entries[i], v) for i in range(a.rows)))
    cobounded = False
    low_first = True  # bR intersects A R^k only in 0
    for r in ring.elements():
        br = tuple(ring.mul(e, r) for e in b_col)
        if r != ring.zero and br in image:
            cobounded = True
        if r != ring.zero and br in image and any(e != ring.zero for e in br):
            low_first = False
    rann_b_zero = all(
        any(ring.mul(e, r) != ring.zero for e in b_col)
        for r in ring.elements() if r != ring.zero)
    low = low_first and rann_b_zero
    return CriteriaVerdict(bounded, high, low, cobounded, ())


def _criteria_int(lphi) -> CriteriaVerdict:
    a, b = lphi.a, lphi.b
    m = lphi.eq_count
    b_col = [b.entries[i][0] for i in range(m)]
    basis = intlin.left_kernel(a.to_int_rows(), m) if a.cols else \
        intlin.identity(m)
    contained = all(sum(t[i] * b_col[i] for i in range(m)) == 0
                    for t in basis)
    high = contained
    bounded = not contained
    # {r : b r in image(A)} is g Z; compute g by solving b r - A v = 0
    width = 1 + a.cols
    rows = [[b_col[i]] + [-a.entries[i][j] for j in range(a.cols)]
            for i in range(m)]
    ker = intlin.kernel(rows, width)
    proj = intlin.hnf([[row[0]] for row in ker], 1)
    g = proj[0][0] if proj else 0
    b_is_zero = all(e == 0 for e in b_col)
    cobounded = g != 0
    if b_is_zero:
        cobounded = True  # b r = 0 lies in the image for any nonzero r
    low_first = g == 0 or b_is_zero  # bR meets image only in 0
    low = low_first and not b_is_zero
    return CriteriaVerdict(bounded, high, low, cobounded, ())


def _dot(ring, row, col):
    acc = ring.zero
    for x, y in zip(row, col):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# the basic-RD table

def _rd_clauses(ring, r, s, verdict: CriteriaVerdict, is_domain):
    clauses = []
    if s == ring.one:
        for flag, num in ((verdict.bounded, 5), (verdict.high, 6),
                          (verdict.low, 7), (verdict.cobounded, 8)):
            if flag:
                clauses.append(num)
    if r == ring.zero:
        for flag, num in ((verdict.bounded, 9), (verdict.high, 10),
                          (verdict.low, 11), (verdict.cobounded, 12)):
            if flag:
                clauses.append(num)
    if is_domain:
        for flag, num in ((verdict.bounded, 13), (verdict.high, 14),
                          (verdict.low, 15), (verdict.cobounded, 16)):
            if flag:
                clauses.append(num)
    if not clauses:
        for flag, num in ((verdict.bounded, 1), (verdict.high, 2),
                          (verdict.low, 3), (verdict.cobounded, 4)):
            if flag:
                clauses.append(num)
    return tuple(clauses)


@dataclass(frozen=True)
class RdEntry:
    r: object
    s: object
    text: str
    classification: FormulaClassification
    criteria: CriteriaVerdict
    clauses: tuple
    agrees: bool
    class_index: int  # equivalence class id within the table


def rd_table(ring, scope=5, side=LEFT):
    """Classify every basic RD formula r|sx over the ring.

    Finite rings: the full table over R x R.  Integers: r, s sampled in
    [-scope, scope].  Each entry is computed both by the classifier and
    by the ring-theoretic criteria; `agrees` records their agreement.
    Entries are grouped into equivalence classes by mutual implication.
    """
    from .lattice import implies as imp
    if isinstance(ring, IntegerRing):
        pairs = [(r, s) for r in range(-scope, scope + 1)
                 for s in range(-scope, scope + 1)]
        is_domain = True
    else:
        pairs = [(r, s) for r in ring.elements() for s in ring.elements()]
        is_domain = _finite_ring_is_domain(ring)
    entries = []
    class_reps = []  # list of representative formulas
    for r, s in pairs:
        phi = divisibility(ring, r, s, side=side)
        cls = classify(phi)
        crit = proposition_criteria(phi)
        agrees = (cls.bounded == crit.bounded and cls.high == crit.high
                  and cls.low == crit.low and cls.cobounded == crit.cobounded)
        clauses = _rd_clauses(ring, r, s, crit, is_domain)
        idx = None
        for ci, rep in enumerate(class_reps):
            if imp(phi, rep) and imp(rep, phi):
                idx = ci
                break
        if idx is None:
            class_reps.append(phi)
            idx = len(class_reps) - 1
        entries.append(RdEntry(r, s, str(phi), cls, crit, clauses, agrees, idx))
    return entries, class_reps


def _finite_ring_is_domain(ring):
    for a in ring.elements():
        if a == ring.zero:
            continue
        for b in ring.elements():
            if b != ring.zero and ring.mul(a, b) == ring.zero:
                return False
    return True


# ---------------------------------------------------------------------------
# essential formulas and the annihilator-match probe

def is_essential(phi: PpFormula) -> bool:
    """phi(R) meets every nonzero principal right ideal (finite rings)."""
    ring = phi.ring
    if not ring.is_finite:
        raise UnsupportedRingError("essentiality is checked over finite rings")
    if phi.arity != 1:
        raise ArityError("essentiality applies to unary formulas")
    value = evaluate(as_left(phi), regular_module(as_left(phi).ring, LEFT))
    members = {v[0] for v in value.elements}
    for a in ring.elements():
        if a == ring.zero:
            continue
        ideal = {ring.mul(a, r) for r in ring.elements()}
        if not (members & (ideal - {ring.zero})):
            return False
    return True


def phi_membership(phi: PpFormula):
    """Does the dual's value on the other side equal the left annihilator
    of I = phi(R)?  Returns (member, detail dict with the three sets)."""
    ring = phi.ring
    if not ring.is_finite:
        raise UnsupportedRingError("the probe runs over finite rings")
    if phi.arity != 1 or phi.side != LEFT:
        raise ArityError("the probe applies to unary left formulas")
    ideal_val = evaluate(phi, regular_module(ring, LEFT))
    ideal = sorted(v[0] for v in ideal_val.elements)
    left_ann = sorted(
        t for t in ring.elements()
        if all(ring.mul(t, i) == ring.zero for i in ideal))
    dual_val = evaluate(dual(phi), regular_module(ring, RIGHT))
    dual_set = sorted(v[0] for v in dual_val.elements)
    member = dual_set == left_ann
    return member, {"ideal": ideal, "left_annihilator": left_ann,
                    "dual_value": dual_set}
