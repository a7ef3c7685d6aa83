"""Cyclic coordinates for finite explicit modules.

The additive group of a finite module is decomposed into cyclic factors
once (breadth-first representatives over a greedy generating set, then
Smith normal form of the collected relations).  Scalar action becomes an
integer matrix per ring element, so pp-conditions at a point reduce to
integer congruence systems no matter how many witness variables the
formula carries.
"""

from __future__ import annotations

from . import intlin

_cache: dict[int, "ModuleCoords"] = {}


class ModuleCoords:
    def __init__(self, module):
        self.module = module
        gens = []
        rep = {module.zero: None}
        order = [module.zero]
        # greedy generating set with BFS representatives
        for cand in module.elements():
            if cand in rep:
                continue
            gens.append(cand)
            gi = len(gens) - 1
            frontier = list(order)
            while frontier:
                nxt = []
                for x in frontier:
                    y = module.add(x, cand)
                    if y not in rep:
                        vec = list(self._rep_vec(rep, x, len(gens)))
                        vec[gi] += 1
                        rep[y] = tuple(vec)
                        order.append(y)
                        nxt.append(y)
                frontier = nxt
        self._gens = gens
        g = len(gens)
        reps = {module.zero: (0,) * g}
        for elt, vec in rep.items():
            if vec is not None:
                reps[elt] = tuple(vec) + (0,) * (g - len(vec))
        # relations: rep(x) + e_i - rep(x + g_i) for all x, i
        rel = []
        for x in module.elements():
            rx = reps[x]
            for i, gen in enumerate(gens):
                ry = reps[module.add(x, gen)]
                row = [rx[j] - ry[j] + (1 if j == i else 0) for j in range(g)]
                if any(row):
                    rel.append(row)
        basis = intlin.hnf(rel, g) if rel else []
        if basis and len(basis) == g:
            res = intlin.snf(basis)
            keep = [i for i, d in enumerate(res.diag) if d != 1]
            self._v = res.v
            self.moduli = tuple(res.diag[i] for i in keep)
            self._keep = keep
        else:
            # torsion-free impossible for a finite module; g == 0 means
            # the zero module
            self._v = intlin.identity(g)
            self.moduli = tuple()
            self._keep = []
        self.width = len(self.moduli)
        self._reps = reps
        self._coords = {}
        for elt, rvec in reps.items():
            full = intlin.vec_mat(list(rvec), self._v)
            self._coords[elt] = tuple(
                full[i] % self.moduli[pos]
                for pos, i in enumerate(self._keep))
        self._by_coords = {v: k for k, v in self._coords.items()}
        self._action = {}

    @staticmethod
    def _rep_vec(rep, x, width):
        vec = rep[x]
        if vec is None:
            return (0,) * width
        return tuple(vec) + (0,) * (width - len(vec))

    def coords(self, elt):
        return self._coords[elt]

    def element(self, coords):
        key = tuple(c % d for c, d in zip(coords, self.moduli))
        return self._by_coords[key]

    def action_matrix(self, r):
        """Integer matrix of a -> r*a on the cyclic coordinates."""
        mat = self._action.get(r)
        if mat is None:
            cols = []
            for pos in range(self.width):
                unit = tuple(1 if i == pos else 0 for i in range(self.width))
                base = self.element(unit)
                cols.append(self.coords(self.module.act(r, base)))
            mat = [[cols[j][i] for j in range(self.width)]
                   for i in range(self.width)]
            self._action[r] = mat
        return mat


def coords_for_module(module) -> ModuleCoords:
    key = id(module)
    found = _cache.get(key)
    if found is None:
        found = ModuleCoords(module)
        _cache[key] = found
    return found


def solve_point(lphi, module, point) -> bool:
    """Does the left formula hold of `point` (tuple of elements) in M?

    Witness existence is one integer congruence system in the module
    coordinates, so the cost is polynomial in the formula size.
    """
    mc = coords_for_module(module)
    s = mc.width
    if s == 0:
        return True  # zero module satisfies every pp formula
    m, k = lphi.eq_count, lphi.witness_arity
    ring = module.ring
    rows, rhs, moduli = [], [], []
    act = mc.action_matrix
    targets = []
    for i in range(m):
        acc = module.zero
        for r, xj in zip(lphi.b.entries[i], point):
            acc = module.add(acc, module.act(r, xj))
        targets.append(mc.coords(acc))
    for i in range(m):
        mats = [act(lphi.a.entries[i][j]) for j in range(k)]
        for c in range(s):
            row = [0] * (k * s)
            for j in range(k):
                mrow = mats[j][c]
                for t in range(s):
                    row[j * s + t] = mrow[t]
            rows.append(row)
            rhs.append(targets[i][c])
            moduli.append(mc.moduli[c])
    if not rows:
        return True
    return intlin.solve_congruences(rows, rhs, moduli) is not None
