"""Deciding the partial order on pp formulas.

`implies` is the primary decision procedure: build the free realization
of the smaller formula and test the larger one at the distinguished
tuple.  Over Z and Z/n this is integer linear algebra; over table rings
the test runs through additive-coordinate linear solving, so no
enumeration of module elements is needed.

`presta_solve` is the independent cross-check: it decides the defining
pair of matrix equations C X + Y B = D, Y A = C Z directly and returns
witness matrices.  `presta_search` is a further brute-force fallback for
small finite instances.
"""

from __future__ import annotations

import itertools

from . import intlin, ringsolve
from .errors import ArityError, CapExceeded, SideError
from .formulas import LEFT, PpFormula, as_left
from .rings import (IntegerRing, ModularRing, RingMatrix,
                    left_annihilator)


def _check_pair(phi: PpFormula, psi: PpFormula):
    if phi.ring != psi.ring and phi.ring is not psi.ring:
        raise SideError("formulas live over different rings")
    if phi.side != psi.side:
        raise SideError("formulas live on different sides")
    if phi.arity != psi.arity:
        raise ArityError("formulas have different free arities")


def implies(phi: PpFormula, psi: PpFormula) -> bool:
    """phi <= psi in the pp lattice (phi(M) inside psi(M) for all M)."""
    _check_pair(phi, psi)
    lphi, lpsi = as_left(phi), as_left(psi)
    ring = lphi.ring
    if isinstance(ring, IntegerRing):
        return _implies_int(lphi, lpsi, modulus=0)
    if isinstance(ring, ModularRing):
        return _implies_int(lphi, lpsi, modulus=ring.n)
    return _implies_table(lphi, lpsi)


def _implies_int(lphi, lpsi, modulus):
    """Test psi at the free realization of phi inside Z^(n+k) / L.

    L is the integer row span of (B | -A); over Z/n the whole system is
    a congruence system mod n, over Z it is exact.  Solvability of
    A_psi Y == B_psi X0 mod L decides the implication.
    """
    n, k = lphi.arity, lphi.witness_arity
    dim = n + k
    rel = []
    for i in range(lphi.eq_count):
        rel.append([lphi.b.entries[i][j] for j in range(n)]
                   + [-lphi.a.entries[i][j] for j in range(k)])
    rel = intlin.hnf(rel, dim)
    mp, kp = lpsi.eq_count, lpsi.witness_arity
    width = kp * dim + mp * len(rel)
    rows, rhs = [], []
    for i in range(mp):
        for c in range(dim):
            row = [0] * width
            for j in range(kp):
                row[j * dim + c] = lpsi.a.entries[i][j]
            for t, rrow in enumerate(rel):
                row[kp * dim + i * len(rel) + t] = rrow[c]
            rows.append(row)
            rhs.append(lpsi.b.entries[i][c] if c < n else 0)
    if modulus:
        return intlin.solve_congruences(
            rows, rhs, [modulus] * len(rows)) is not None
    return intlin.solve(rows, rhs) is not None


def _implies_table(lphi, lpsi):
    """Same test over a table ring via side-tagged linear solving.

    Unknowns: the witness tuple entries (module coordinates lifted to
    R^(n+k)) and one slack row vector per psi-equation ranging over the
    presentation span.
    """
    ring = lphi.ring
    n, k = lphi.arity, lphi.witness_arity
    dim = n + k
    m = lphi.eq_count
    mp, kp = lpsi.eq_count, lpsi.witness_arity
    rel_rows = []
    for i in range(m):
        rel_rows.append(tuple(lphi.b.entries[i])
                        + tuple(ring.neg(e) for e in lphi.a.entries[i]))
    # unknowns: y (kp blocks of dim) then s (mp blocks of m)
    def y_idx(j, c):
        return j * dim + c

    def s_idx(i, e):
        return kp * dim + i * m + e

    n_unknowns = kp * dim + mp * m
    x0 = [[ring.one if c == j else ring.zero for c in range(dim)]
          for j in range(n)]
    equations = []
    for i in range(mp):
        for c in range(dim):
            terms = []
            for j in range(kp):
                coeff = lpsi.a.entries[i][j]
                if coeff != ring.zero:
                    terms.append((y_idx(j, c), ringsolve.LEFT, coeff))
            for e in range(m):
                coeff = rel_rows[e][c]
                if coeff != ring.zero:
                    terms.append((s_idx(i, e), ringsolve.RIGHT,
                                  ring.neg(coeff)))
            rhs = ring.zero
            for j in range(n):
                rhs = ring.add(rhs, ring.mul(lpsi.b.entries[i][j], x0[j][c]))
            equations.append((terms, rhs))
    return ringsolve.solve_ring_linear(ring, n_unknowns, equations) is not None


def equiv(phi: PpFormula, psi: PpFormula) -> bool:
    """Equality in the pp lattice: implication both ways."""
    return implies(phi, psi) and implies(psi, phi)


# ---------------------------------------------------------------------------
# the matrix-equation criterion

def presta_solve(phi: PpFormula, psi: PpFormula):
    """Decide phi <= psi via solvability of C X + Y B = D and Y A = C Z.

    Returns (solvable, witnesses) where witnesses is a dict with the
    matrices X, Y, Z (as RingMatrix) when solvable.  The witnesses are
    verified by substitution before being returned.
    """
    _check_pair(phi, psi)
    lphi, lpsi = as_left(phi), as_left(psi)
    ring = lphi.ring
    a, b = lphi.a, lphi.b
    c, d = lpsi.a, lpsi.b
    m, k, n = lphi.eq_count, lphi.witness_arity, lphi.arity
    mp, kp = lpsi.eq_count, lpsi.witness_arity
    # unknowns: X (kp x n), Y (mp x m), Z (kp x k)
    if isinstance(ring, IntegerRing):
        sol = _presta_int(a, b, c, d, m, k, n, mp, kp)
    else:
        sol = _presta_ring(ring, a, b, c, d, m, k, n, mp, kp)
    if sol is None:
        return False, None
    x_mat, y_mat, z_mat = sol
    _verify_presta(ring, a, b, c, d, x_mat, y_mat, z_mat)
    return True, {"X": x_mat, "Y": y_mat, "Z": z_mat}


def _presta_int(a, b, c, d, m, k, n, mp, kp):
    nx, ny, nz = kp * n, mp * m, kp * k
    width = nx + ny + nz
    rows, rhs = [], []
    # C X + Y B = D   (mp x n entries)
    for i in range(mp):
        for j in range(n):
            row = [0] * width
            for e in range(kp):
                row[e * n + j] += c.entries[i][e]
            for e in range(m):
                row[nx + i * m + e] += b.entries[e][j]
            rows.append(row)
            rhs.append(d.entries[i][j])
    # Y A - C Z = 0   (mp x k entries)
    for i in range(mp):
        for j in range(k):
            row = [0] * width
            for e in range(m):
                row[nx + i * m + e] += a.entries[e][j]
            for e in range(kp):
                row[nx + ny + e * k + j] -= c.entries[i][e]
            rows.append(row)
            rhs.append(0)
    sol = intlin.solve(rows, rhs)
    if sol is None:
        return None
    ring = a.ring
    x_mat = RingMatrix.from_rows(
        ring, [sol[e * n:(e + 1) * n] for e in range(kp)], cols=n)
    y_mat = RingMatrix.from_rows(
        ring, [sol[nx + i * m:nx + (i + 1) * m] for i in range(mp)], cols=m)
    z_mat = RingMatrix.from_rows(
        ring, [sol[nx + ny + e * k:nx + ny + (e + 1) * k] for e in range(kp)],
        cols=k)
    return x_mat, y_mat, z_mat


def _presta_ring(ring, a, b, c, d, m, k, n, mp, kp):
    nx, ny, nz = kp * n, mp * m, kp * k
    equations = []
    for i in range(mp):
        for j in range(n):
            terms = []
            for e in range(kp):
                if c.entries[i][e] != ring.zero:
                    terms.append((e * n + j, ringsolve.LEFT, c.entries[i][e]))
            for e in range(m):
                if b.entries[e][j] != ring.zero:
                    terms.append((nx + i * m + e, ringsolve.RIGHT,
                                  b.entries[e][j]))
            equations.append((terms, d.entries[i][j]))
    for i in range(mp):
        for j in range(k):
            terms = []
            for e in range(m):
                if a.entries[e][j] != ring.zero:
                    terms.append((nx + i * m + e, ringsolve.RIGHT,
                                  a.entries[e][j]))
            for e in range(kp):
                if c.entries[i][e] != ring.zero:
                    terms.append((nx + ny + e * k + j, ringsolve.LEFT,
                                  ring.neg(c.entries[i][e])))
            equations.append((terms, ring.zero))
    sol = ringsolve.solve_ring_linear(ring, nx + ny + nz, equations)
    if sol is None:
        return None
    x_mat = RingMatrix.from_rows(
        ring, [sol[e * n:(e + 1) * n] for e in range(kp)], cols=n)
    y_mat = RingMatrix.from_rows(
        ring, [sol[nx + i * m:nx + (i + 1) * m] for i in range(mp)], cols=m)
    z_mat = RingMatrix.from_rows(
        ring, [sol[nx + ny + e * k:nx + ny + (e + 1) * k] for e in range(kp)],
        cols=k)
    return x_mat, y_mat, z_mat


def _verify_presta(ring, a, b, c, d, x_mat, y_mat, z_mat):
    lhs1 = _mat_add(ring, c.mul(x_mat), y_mat.mul(b))
    if lhs1.entries != d.entries:
        raise AssertionError("presta witness fails C X + Y B = D")
    lhs2 = y_mat.mul(a)
    rhs2 = c.mul(z_mat)
    if lhs2.entries != rhs2.entries:
        raise AssertionError("presta witness fails Y A = C Z")


def _mat_add(ring, m1: RingMatrix, m2: RingMatrix) -> RingMatrix:
    return RingMatrix(ring, tuple(
        tuple(ring.add(x, y) for x, y in zip(r1, r2))
        for r1, r2 in zip(m1.entries, m2.entries)))


def presta_search(phi: PpFormula, psi: PpFormula, cap=2_000_000):
    """Brute-force fallback: enumerate Y, then per-column membership.

    For each candidate Y the columns of D - Y B must lie in the image of
    C, and so must the columns of Y A.  Exhaustive over finite rings;
    raises CapExceeded when the Y-space or image table is too large.
    """
    _check_pair(phi, psi)
    lphi, lpsi = as_left(phi), as_left(psi)
    ring = lphi.ring
    if not ring.is_finite:
        raise CapExceeded("search fallback needs a finite ring")
    a, b = lphi.a, lphi.b
    c, d = lpsi.a, lpsi.b
    m, k, n = lphi.eq_count, lphi.witness_arity, lphi.arity
    mp, kp = lpsi.eq_count, lpsi.witness_arity
    q = ring.size
    if q ** (mp * m) > cap or q ** kp > cap:
        raise CapExceeded("presta search space too large")
    image = {}
    for v in itertools.product(ring.elements(), repeat=kp):
        col = tuple(
            _dot(ring, c.entries[i], v) for i in range(mp))
        image.setdefault(col, v)
    for y_flat in itertools.product(ring.elements(), repeat=mp * m):
        y_rows = [y_flat[i * m:(i + 1) * m] for i in range(mp)]
        ok = True
        for j in range(n):
            col = tuple(
                ring.sub(d.entries[i][j],
                         _dot(ring, y_rows[i], [b.entries[e][j]
                                                for e in range(m)]))
                for i in range(mp))
            if col not in image:
                ok = False
                break
        if not ok:
            continue
        for j in range(k):
            col = tuple(_dot(ring, y_rows[i], [a.entries[e][j]
                                               for e in range(m)])
                        for i in range(mp))
            if col not in image:
                ok = False
                break
        if ok:
            return True
    return False


def _dot(ring, row, col):
    acc = ring.zero
    for x, y in zip(row, col):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# the kernel criterion for boundedness

def bounded_by_kernel(phi: PpFormula):
    """Boundedness of a unary A|bx: is there t with t A = 0 and t b != 0?

    Returns (bounded, t, r) with r = t b the annihilating scalar; the
    witness t is the first in a fixed deterministic order (index order
    over finite rings, canonical kernel basis order over Z).
    """
    if phi.arity != 1:
        raise ArityError("the kernel criterion applies to unary formulas")
    lphi = as_left(phi)
    ring = lphi.ring
    m = lphi.eq_count
    a, b = lphi.a, lphi.b
    if isinstance(ring, IntegerRing):
        basis = intlin.left_kernel(a.to_int_rows(), m) if a.cols else \
            intlin.identity(m)
        for t in basis:
            r = sum(t[i] * b.entries[i][0] for i in range(m))
            if r:
                if r < 0:
                    t, r = [-x for x in t], -r
                return True, tuple(t), r
        return False, None, None
    if ring.size ** m <= 100_000:
        for t in itertools.product(ring.elements(), repeat=m):
            if a.cols and _vec_mat(ring, t, a) != (ring.zero,) * a.cols:
                continue
            r = _dot(ring, t, [b.entries[i][0] for i in range(m)])
            if r != ring.zero:
                return True, t, r
        return False, None, None
    # large row count: the annihilator group {t : t A = 0} is additive,
    # so t -> t b vanishes on it iff it vanishes on a generating set
    equations = []
    for j in range(a.cols):
        terms = [(i, ringsolve.RIGHT, a.entries[i][j]) for i in range(m)
                 if a.entries[i][j] != ring.zero]
        equations.append(terms)
    for t in ringsolve.kernel_generators(ring, m, equations):
        r = _dot(ring, t, [b.entries[i][0] for i in range(m)])
        if r != ring.zero:
            return True, t, r
    return False, None, None


def _vec_mat(ring, vec, mat: RingMatrix):
    return tuple(
        _dot(ring, vec, [mat.entries[i][j] for i in range(mat.rows)])
        for j in range(mat.cols))
