"""Positive-primitive formulas in divisibility normal form.

A left formula is exists y (A y = B x), written A|Bx, with A an m x k
matrix on the witnesses and B an m x n matrix on the free variables.  A
right formula is exists y (y C = x D); it is stored with C in the A slot
(k x m) and D in the B slot (n x m).  The quantifier-free case is k = 0,
and the always-true formula is the k = 0 formula with B the zero column.

All transforms here are purely syntactic; equivalence of the results is
a semantic question decided elsewhere.  Every operation returns a
canonicalized formula: equation rows that are zero in both matrices are
dropped (collapsing to the true formula when nothing is left).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ArityError, DimensionError, SideError
from .rings import RingMatrix

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class PpFormula:
    ring: object
    side: str
    a: RingMatrix  # witness-side matrix (C for right formulas)
    b: RingMatrix  # free-variable matrix (D for right formulas)

    @property
    def arity(self):
        return self.b.cols if self.side == LEFT else self.b.rows

    @property
    def witness_arity(self):
        return self.a.cols if self.side == LEFT else self.a.rows

    @property
    def eq_count(self):
        return self.a.rows if self.side == LEFT else self.a.cols

    def size(self):
        return (self.eq_count + self.witness_arity + self.arity
                + self.a.nonzero_count() + self.b.nonzero_count())

    def key(self):
        return (self.side, self.a.entries, self.b.entries)

    def __str__(self):
        from .parser import formula_to_text
        return formula_to_text(self)


def make_formula(ring, side, a_rows, b_rows, *, k=None, n=None) -> PpFormula:
    """Build and canonicalize a formula from raw entry rows.

    For side "left" the rows are the m equation rows of A (width k) and
    B (width n); for side "right" they are the rows of C (k of them) and
    D (n of them), each of width m.
    """
    if side not in (LEFT, RIGHT):
        raise SideError(f"unknown side {side!r}")
    if side == LEFT:
        a_cols = k
    else:
        a_cols = len(b_rows[0]) if b_rows and not a_rows else None
    a = RingMatrix.from_rows(ring, a_rows, cols=a_cols)
    b = RingMatrix.from_rows(ring, b_rows, cols=None)
    if side == LEFT:
        if a.rows != b.rows:
            raise DimensionError("A and B must have the same number of rows")
        return _canonical_left(ring, a, b)
    if a.entries and b.entries and a.cols != b.cols:
        raise DimensionError("C and D must have the same number of columns")
    left = _canonical_left(ring.opposite(), a.transpose(), b.transpose())
    return _from_left_over_op(ring, left)


def _canonical_left(ring, a: RingMatrix, b: RingMatrix) -> PpFormula:
    z = ring.zero
    keep = [i for i in range(b.rows)
            if any(e != z for e in (a.entries[i] if a.entries else ()))
            or any(e != z for e in b.entries[i])]
    n = b.cols
    if not keep:
        return true_formula(ring, n)
    a2 = RingMatrix(ring, tuple(a.entries[i] for i in keep))
    b2 = RingMatrix(ring, tuple(b.entries[i] for i in keep))
    return PpFormula(ring, LEFT, a2, b2)


def as_left(phi: PpFormula):
    """View over the (possibly opposite) ring in which phi reads A|Bx."""
    if phi.side == LEFT:
        return phi
    op = phi.ring.opposite()
    return PpFormula(op, LEFT, _retag(phi.a.transpose(), op),
                     _retag(phi.b.transpose(), op))


def _retag(mat: RingMatrix, ring) -> RingMatrix:
    return RingMatrix(ring, mat.entries, mat.ncols)


def _from_left_over_op(ring, left_phi: PpFormula) -> PpFormula:
    return PpFormula(ring, RIGHT, _retag(left_phi.a.transpose(), ring),
                     _retag(left_phi.b.transpose(), ring))


def true_formula(ring, n=1, side=LEFT) -> PpFormula:
    """The always-true formula x = x: k = 0 with a zero B block."""
    a = RingMatrix(ring, tuple(() for _ in range(n)))
    b = RingMatrix.zero_matrix(ring, n, n)
    phi = PpFormula(ring, LEFT, a, b)
    return phi if side == LEFT else _from_left_over_op(ring, phi)


def zero_formula(ring, n=1, side=LEFT) -> PpFormula:
    """The always-false-except-zero formula x = 0."""
    a = RingMatrix(ring, tuple(() for _ in range(n)))
    b = RingMatrix.identity(ring, n)
    phi = PpFormula(ring, LEFT, a, b)
    return phi if side == LEFT else _from_left_over_op(ring, phi)


def divisibility(ring, r, s=None, side=LEFT) -> PpFormula:
    """The basic RD formula r|sx (s defaults to 1)."""
    s = ring.one if s is None else s
    if side == LEFT:
        return make_formula(ring, LEFT, [[r]], [[s]])
    return make_formula(ring, RIGHT, [[r]], [[s]])


def annihilation(ring, s, side=LEFT) -> PpFormula:
    """The quantifier-free formula sx = 0."""
    if side == LEFT:
        return make_formula(ring, LEFT, [[]], [[s]], k=0)
    return make_formula(ring, RIGHT, [], [[s]], k=0)


def _require_same(phi: PpFormula, psi: PpFormula):
    if phi.ring is not psi.ring and phi.ring != psi.ring:
        raise SideError("formulas live over different rings")
    if phi.side != psi.side:
        raise SideError("formulas live on different sides")
    if phi.arity != psi.arity:
        raise ArityError("formulas have different free arities")


def _require_unary(phi: PpFormula):
    if phi.arity != 1:
        raise ArityError("operation requires a unary formula")


def dual(phi: PpFormula) -> PpFormula:
    """Elementary dual: left A|Bx maps to right exists z (x = zB, zA = 0).

    The result is produced constructively in normal form with fresh
    witnesses; dual(dual(phi)) is semantically equivalent to phi but not
    syntactically identical.
    """
    ring = phi.ring
    lphi = as_left(phi)
    ring_l = lphi.ring
    m, k, n = lphi.eq_count, lphi.witness_arity, lphi.arity
    z = ring_l.zero
    one = ring_l.one
    # right formula over ring_l: C = [B | A] (m x (n+k)), D = [I | 0]
    c_rows = [tuple(lphi.b.entries[i]) + tuple(lphi.a.entries[i])
              for i in range(m)]
    d_rows = [tuple(one if j == i else z for j in range(n))
              + tuple(z for _ in range(k)) for i in range(n)]
    dual_left = _canonical_left(
        ring_l.opposite(),
        RingMatrix.from_rows(ring_l.opposite(), [list(col) for col in zip(*c_rows)]
                             if c_rows else [], cols=m),
        RingMatrix.from_rows(ring_l.opposite(), [list(col) for col in zip(*d_rows)]
                             if d_rows else [], cols=m))
    if phi.side == LEFT:
        return _from_left_over_op(ring, dual_left)
    # phi was right, its left view lives over ring.opposite(); the dual
    # of the left view is a left formula back over the original ring
    return PpFormula(ring, LEFT, _retag(dual_left.a, ring),
                     _retag(dual_left.b, ring))


def multiple(r, phi: PpFormula) -> PpFormula:
    """The multiple r*phi: exists z (x = r z and phi(z)); defines r*phi(M)."""
    _require_unary(phi)
    if phi.side == RIGHT:
        op = multiple(r, as_left(phi))
        return _from_left_over_op(phi.ring, op)
    ring = phi.ring
    r = ring.coerce(r)
    m, k = phi.eq_count, phi.witness_arity
    z = ring.zero
    a_rows = [[r] + [z] * k]
    b_rows = [[ring.one]]
    for i in range(m):
        a_rows.append([ring.neg(phi.b.entries[i][0])] + list(phi.a.entries[i]))
        b_rows.append([z])
    return make_formula(ring, LEFT, a_rows, b_rows, k=k + 1)


def inverse(r, phi: PpFormula) -> PpFormula:
    """The inverse r^{-1}phi, i.e. phi(rx); defines the preimage of phi(M)."""
    _require_unary(phi)
    if phi.side == RIGHT:
        op = inverse(r, as_left(phi))
        return _from_left_over_op(phi.ring, op)
    ring = phi.ring
    r = ring.coerce(r)
    b_rows = [[ring.mul(row[0], r)] for row in phi.b.entries]
    return make_formula(ring, LEFT, [list(row) for row in phi.a.entries],
                        b_rows, k=phi.witness_arity)


def meet(phi: PpFormula, psi: PpFormula) -> PpFormula:
    """Conjunction; evaluates to the intersection of the two subgroups."""
    _require_same(phi, psi)
    if phi.side == RIGHT:
        out = meet(as_left(phi), as_left(psi))
        return _from_left_over_op(phi.ring, out)
    ring = phi.ring
    z = ring.zero
    k1, k2 = phi.witness_arity, psi.witness_arity
    a_rows = [list(row) + [z] * k2 for row in phi.a.entries]
    a_rows += [[z] * k1 + list(row) for row in psi.a.entries]
    b_rows = [list(row) for row in phi.b.entries]
    b_rows += [list(row) for row in psi.b.entries]
    return make_formula(ring, LEFT, a_rows, b_rows, k=k1 + k2)


def join(phi: PpFormula, psi: PpFormula) -> PpFormula:
    """Sum; evaluates to phi(M) + psi(M) via x = u + v with u, v quantified."""
    _require_same(phi, psi)
    if phi.side == RIGHT:
        out = join(as_left(phi), as_left(psi))
        return _from_left_over_op(phi.ring, out)
    ring = phi.ring
    z, one = ring.zero, ring.one
    n = phi.arity
    k1, k2 = phi.witness_arity, psi.witness_arity
    # witness layout: u (n), v (n), y1 (k1), y2 (k2)
    width = 2 * n + k1 + k2
    a_rows, b_rows = [], []
    for i in range(phi.eq_count):
        row = [z] * width
        for j in range(n):
            row[j] = ring.neg(phi.b.entries[i][j])
        for j in range(k1):
            row[2 * n + j] = phi.a.entries[i][j]
        a_rows.append(row)
        b_rows.append([z] * n)
    for i in range(psi.eq_count):
        row = [z] * width
        for j in range(n):
            row[n + j] = ring.neg(psi.b.entries[i][j])
        for j in range(k2):
            row[2 * n + k1 + j] = psi.a.entries[i][j]
        a_rows.append(row)
        b_rows.append([z] * n)
    for i in range(n):
        row = [z] * width
        row[i] = one
        row[n + i] = one
        a_rows.append(row)
        b_rows.append([one if j == i else z for j in range(n)])
    return make_formula(ring, LEFT, a_rows, b_rows, k=width)


def gamma_subscript(psi: PpFormula, gamma: PpFormula) -> PpFormula:
    """psi_gamma: conjoin the unary gamma at every free variable of psi."""
    _require_unary(gamma)
    if psi.side != gamma.side:
        raise SideError("formulas live on different sides")
    if psi.side == RIGHT:
        out = gamma_subscript(as_left(psi), as_left(gamma))
        return _from_left_over_op(psi.ring, out)
    ring = psi.ring
    z = ring.zero
    n, k = psi.arity, psi.witness_arity
    g, gk = gamma.eq_count, gamma.witness_arity
    width = k + n * gk
    a_rows = [list(row) + [z] * (n * gk) for row in psi.a.entries]
    b_rows = [list(row) for row in psi.b.entries]
    for var in range(n):
        for i in range(g):
            row = [z] * width
            for j in range(gk):
                row[k + var * gk + j] = gamma.a.entries[i][j]
            a_rows.append(row)
            b_rows.append([gamma.b.entries[i][0] if j == var else z
                           for j in range(n)])
    return make_formula(ring, LEFT, a_rows, b_rows, k=width)


def gamma_superscript(phi: PpFormula, gamma: PpFormula) -> PpFormula:
    """phi^gamma: conjoin gamma at every free variable and every witness."""
    _require_unary(gamma)
    if phi.side != gamma.side:
        raise SideError("formulas live on different sides")
    if phi.side == RIGHT:
        out = gamma_superscript(as_left(phi), as_left(gamma))
        return _from_left_over_op(phi.ring, out)
    ring = phi.ring
    z = ring.zero
    n, k = phi.arity, phi.witness_arity
    g, gk = gamma.eq_count, gamma.witness_arity
    # witness layout: y (k), w-blocks for free vars (n*gk), w-blocks for
    # witnesses (k*gk)
    width = k + (n + k) * gk
    a_rows = [list(row) + [z] * ((n + k) * gk) for row in phi.a.entries]
    b_rows = [list(row) for row in phi.b.entries]
    for var in range(n):
        for i in range(g):
            row = [z] * width
            for j in range(gk):
                row[k + var * gk + j] = gamma.a.entries[i][j]
            a_rows.append(row)
            b_rows.append([gamma.b.entries[i][0] if j == var else z
                           for j in range(n)])
    for wit in range(k):
        for i in range(g):
            row = [z] * width
            row[wit] = ring.neg(gamma.b.entries[i][0])
            for j in range(gk):
                row[k + (n + wit) * gk + j] = gamma.a.entries[i][j]
            a_rows.append(row)
            b_rows.append([z] * n)
    return make_formula(ring, LEFT, a_rows, b_rows, k=width)


# ---------------------------------------------------------------------------
# deterministic generation

def random_formula(ring, rng, side=LEFT, n=1, max_dim=3) -> PpFormula:
    """A random formula with dimensions m, k <= max_dim, uniform entries."""
    m = rng.randint(1, max_dim)
    k = rng.randint(0, max_dim)
    a_rows = [[ring.random_element(rng) for _ in range(k)] for _ in range(m)]
    b_rows = [[ring.random_element(rng) for _ in range(n)] for _ in range(m)]
    if side == RIGHT:
        a_rows = [list(col) for col in zip(*a_rows)] if k else []
        b_rows = [list(col) for col in zip(*b_rows)]
        return make_formula(ring, RIGHT, a_rows, b_rows, k=k)
    return make_formula(ring, LEFT, a_rows, b_rows, k=k)


def enumerate_unary_formulas(ring, max_size, side=LEFT):
    """All canonical unary formulas of size <= max_size over a finite ring.

    Size is m + k + n + (number of nonzero entries); duplicates after
    canonicalization are removed.  Deterministic order.
    """
    nonzero = [e for e in ring.elements() if e != ring.zero]
    seen = set()
    out = []
    for m in range(1, max_size):
        for k in range(0, max_size - m):
            budget = max_size - m - k - 1
            if budget < 0:
                continue
            positions = m * (k + 1)
            for count in range(0, min(budget, positions) + 1):
                for pos_combo in itertools.combinations(range(positions), count):
                    for values in itertools.product(nonzero, repeat=count):
                        a_rows = [[ring.zero] * k for _ in range(m)]
                        b_rows = [[ring.zero] for _ in range(m)]
                        for pos, val in zip(pos_combo, values):
                            row, col = divmod(pos, k + 1)
                            if col < k:
                                a_rows[row][col] = val
                            else:
                                b_rows[row][0] = val
                        phi = make_formula(ring, side, a_rows, b_rows, k=k) \
                            if side == LEFT else make_formula(
                                ring, RIGHT,
                                [list(c) for c in zip(*a_rows)] if k else [],
                                [list(c) for c in zip(*b_rows)], k=k)
                        key = phi.key()
                        if key not in seen:
                            seen.add(key)
                            out.append(phi)
    return out
