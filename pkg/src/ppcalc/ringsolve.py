"""Exact linear solving over finite rings via additive coordinates.

A finite ring's additive group is a finite abelian group; once it is
written as a product of cyclic groups, multiplication by a fixed element
on either side becomes an integer matrix on the cyclic coordinates.  Any
system that is additive in its unknowns (each unknown multiplied by ring
constants on the left or on the right) then turns into an integer
congruence system, which is solved exactly by Smith-normal-form methods.

This replaces brute-force enumeration wherever solvability of mixed-side
linear systems over table rings is needed; for Z/n the coordinates are
the trivial single cyclic factor.
"""

from __future__ import annotations

from . import intlin
from .rings import ModularRing, TableRing

#: term sides: coefficient multiplies the unknown from the left or right
LEFT, RIGHT = "l", "r"

_cache: dict[int, "AdditiveCoords"] = {}


class AdditiveCoords:
    """Cyclic-coordinate view of the additive group of a finite ring."""

    def __init__(self, ring):
        self.ring = ring
        if isinstance(ring, ModularRing):
            self.moduli = (ring.n,)
            self._generators = (1 % ring.n,)
            self._trivial = True
        else:
            self._trivial = False
            self._build_table_coords(ring)
        self.width = len(self.moduli)
        s = set(self.moduli)
        self.prime = self.moduli[0] if len(s) == 1 and _is_prime(self.moduli[0]) else None
        self._left = {}
        self._right = {}
        self._coord_cache = {}

    def _build_table_coords(self, ring: TableRing):
        q = ring.q
        rel = [[0] * q]
        rel[0][ring.zero] = 1
        for i in range(q):
            for j in range(i, q):
                row = [0] * q
                row[i] += 1
                row[j] += 1
                row[ring.add_table[i][j]] -= 1
                rel.append(row)
        basis = intlin.hnf(rel, q)
        res = intlin.snf(basis)
        # coordinates: x mod L  <->  (x @ V) mod diag(d); keep the
        # nontrivial cyclic factors only
        keep = [i for i, d in enumerate(res.diag) if d != 1]
        self._v = res.v
        self._vinv = res.vinv
        self._keep = keep
        self.moduli = tuple(res.diag[i] for i in keep)
        gens = []
        for pos, i in enumerate(keep):
            unit = [0] * q
            unit[i] = 1
            coeffs = intlin.vec_mat(unit, res.vinv)
            gens.append(self._combine(coeffs))
        self._generators = tuple(gens)

    def _combine(self, coeffs):
        """Sum of coeff_j * element_j computed inside the ring."""
        ring = self.ring
        acc = ring.zero
        for j, c in enumerate(coeffs):
            if not c:
                continue
            step = j if c > 0 else ring.neg_table[j]
            for _ in range(abs(c) % _additive_order(ring, j)):
                acc = ring.add_table[acc][step]
        return acc

    def coords(self, elt) -> tuple:
        if self._trivial:
            return (elt,)
        cached = self._coord_cache.get(elt)
        if cached is None:
            q = self.ring.q
            unit = [0] * q
            unit[elt] = 1
            full = intlin.vec_mat(unit, self._v)
            cached = tuple(full[i] % self.moduli[pos]
                           for pos, i in enumerate(self._keep))
            self._coord_cache[elt] = cached
        return cached

    def element(self, coords) -> int:
        if self._trivial:
            return coords[0] % self.moduli[0]
        ring = self.ring
        acc = ring.zero
        for c, g, d in zip(coords, self._generators, self.moduli):
            c %= d
            for _ in range(c):
                acc = ring.add_table[acc][g]
        return acc

    def left_matrix(self, r):
        """Integer matrix of a -> r*a on the cyclic coordinates (columns)."""
        mat = self._left.get(r)
        if mat is None:
            ring = self.ring
            cols = [self.coords(ring.mul(r, g)) for g in self._generators]
            mat = [[cols[j][i] for j in range(self.width)]
                   for i in range(self.width)]
            self._left[r] = mat
        return mat

    def right_matrix(self, r):
        mat = self._right.get(r)
        if mat is None:
            ring = self.ring
            cols = [self.coords(ring.mul(g, r)) for g in self._generators]
            mat = [[cols[j][i] for j in range(self.width)]
                   for i in range(self.width)]
            self._right[r] = mat
        return mat


def _additive_order(ring, elt):
    acc = elt
    order = 1
    while acc != ring.zero:
        acc = ring.add_table[acc][elt]
        order += 1
    return order


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def coords_for(ring) -> AdditiveCoords:
    key = id(ring)
    found = _cache.get(key)
    if found is None:
        found = AdditiveCoords(ring)
        _cache[key] = found
    return found


def kernel_generators(ring, n_unknowns, equations):
    """Generators of the solution group of a homogeneous system.

    `equations` lists term lists as in solve_ring_linear (the right-hand
    sides are implicitly zero).  Returns a list of ring-element vectors
    generating {u : all equations vanish} as an additive group.
    """
    ac = coords_for(ring)
    s = ac.width
    width = n_unknowns * s
    rows, moduli = [], []
    for terms in equations:
        blocks = {}
        for u_idx, side, coeff in terms:
            mat = ac.left_matrix(coeff) if side == LEFT else ac.right_matrix(coeff)
            acc = blocks.get(u_idx)
            if acc is None:
                blocks[u_idx] = [row[:] for row in mat]
            else:
                for i in range(s):
                    for j in range(s):
                        acc[i][j] += mat[i][j]
        for i in range(s):
            row = [0] * width
            for u_idx, mat in blocks.items():
                base = u_idx * s
                for j in range(s):
                    row[base + j] = mat[i][j]
            rows.append(row)
            moduli.append(ac.moduli[i])
    aug = []
    n_rows = len(rows)
    for idx, row in enumerate(rows):
        slack = [0] * n_rows
        slack[idx] = moduli[idx]
        aug.append(row + slack)
    ker = intlin.kernel(aug, width + n_rows) if aug else intlin.identity(width)
    out = []
    for vec in ker:
        u = []
        for j in range(n_unknowns):
            u.append(ac.element(tuple(vec[j * s + i] for i in range(s))))
        out.append(tuple(u))
    return out


def solve_ring_linear(ring, n_unknowns, equations):
    """Solve a side-tagged linear system over a finite ring.

    `equations` is a list of (terms, rhs) pairs where each term is
    (unknown_index, side, coefficient): side LEFT means coeff * u, side
    RIGHT means u * coeff.  Returns a list of ring elements or None.
    """
    ac = coords_for(ring)
    s = ac.width
    width = n_unknowns * s
    rows, rhs_flat, moduli = [], [], []
    for terms, rhs in equations:
        blocks = {}
        for u_idx, side, coeff in terms:
            mat = ac.left_matrix(coeff) if side == LEFT else ac.right_matrix(coeff)
            acc = blocks.get(u_idx)
            if acc is None:
                blocks[u_idx] = [row[:] for row in mat]
            else:
                for i in range(s):
                    arow, mrow = acc[i], mat[i]
                    for j in range(s):
                        arow[j] += mrow[j]
        rc = ac.coords(rhs)
        for i in range(s):
            row = [0] * width
            for u_idx, mat in blocks.items():
                base = u_idx * s
                mrow = mat[i]
                for j in range(s):
                    row[base + j] = mrow[j]
            rows.append(row)
            rhs_flat.append(rc[i])
            moduli.append(ac.moduli[i])
    if ac.prime is not None:
        sol = intlin.solve_mod_prime(rows, rhs_flat, ac.prime)
    else:
        sol = intlin.solve_congruences(rows, rhs_flat, moduli)
    if sol is None:
        return None
    out = []
    for u in range(n_unknowns):
        out.append(ac.element(tuple(sol[u * s + i] for i in range(s))))
    return out
