"""Exact evaluation of pp formulas in concrete modules.

For explicit finite modules, evaluation enumerates the witness images
once and then filters candidate tuples, so the cost is |M|^k + |M|^n.
For finitely generated abelian groups, the defining system is lifted to
an integer linear system modulo the relation lattice and the solution
lattice is projected onto the free variables.

Also here: free realizations, the flatness and absolute-purity defect
pairs, divisibility of a module, and the bounded purity check.
"""

from __future__ import annotations

import itertools

from . import intlin
from .errors import (ArityError, CapExceeded, SideError,
                     UnsupportedRingError)
from .formulas import LEFT, RIGHT, PpFormula, as_left, dual
from .modules import (COSET_CAP, ExplicitModule, ExplicitSubgroup,
                      FgAbelianModule, LatticeSubgroup, closure,
                      explicit_subgroup, fg_abelian_from_presentation,
                      make_lattice_subgroup, regular_module)
from .rings import IntegerRing


def _left_pair(phi: PpFormula, module):
    """Normalize (formula, module) to the left-side code path."""
    if phi.side == LEFT:
        if module.side != LEFT:
            raise SideError("left formulas evaluate in left modules")
        return as_left(phi), module
    if module.side != RIGHT:
        raise SideError("right formulas evaluate in right modules")
    if isinstance(module, FgAbelianModule):
        return as_left(phi), module  # Z is commutative; transpose suffices
    return as_left(phi), module.opposite_view()


def evaluate(phi: PpFormula, module):
    """The solution subgroup phi(M) of M^n, exactly."""
    if phi.ring != module.ring and phi.ring is not module.ring:
        raise SideError("formula and module rings differ")
    lphi, mod = _left_pair(phi, module)
    if isinstance(mod, ExplicitModule):
        return _evaluate_explicit(lphi, mod)
    return _evaluate_fg(lphi, mod)


def _witness_images(lphi: PpFormula, mod: ExplicitModule):
    """The set {A y : y in M^k} in M^m."""
    m, k = lphi.eq_count, lphi.witness_arity
    act, add = mod.act_table, mod.add_table
    zero = mod.zero
    images = {(zero,) * m}
    if k:
        a_entries = lphi.a.entries
        for y in itertools.product(mod.elements(), repeat=k):
            vec = []
            for i in range(m):
                acc = zero
                row = a_entries[i]
                for r, yj in zip(row, y):
                    acc = add[acc][act[r][yj]]
                vec.append(acc)
            images.add(tuple(vec))
    return images


#: largest witness space enumerated directly; beyond it, evaluation
#: switches to per-point congruence solving in module coordinates
ENUM_THRESHOLD = 100_000


def _evaluate_explicit(lphi: PpFormula, mod: ExplicitModule) -> ExplicitSubgroup:
    from .modcoords import solve_point
    m, n = lphi.eq_count, lphi.arity
    act, add = mod.act_table, mod.add_table
    zero = mod.zero
    use_enum = mod.size ** lphi.witness_arity <= ENUM_THRESHOLD
    images = _witness_images(lphi, mod) if use_enum else None
    b_entries = lphi.b.entries
    solutions = []
    for x in itertools.product(mod.elements(), repeat=n):
        if use_enum:
            vec = []
            for i in range(m):
                acc = zero
                row = b_entries[i]
                for r, xj in zip(row, x):
                    acc = add[acc][act[r][xj]]
                vec.append(acc)
            if tuple(vec) in images:
                solutions.append(x)
        elif solve_point(lphi, mod, x):
            solutions.append(x)
    return ExplicitSubgroup(mod, n, tuple(sorted(solutions)))


def holds_at(phi: PpFormula, module, point) -> bool:
    """Does phi hold of the given tuple in M (point: tuple of elements)?"""
    from .modcoords import solve_point
    lphi, mod = _left_pair(phi, module)
    if isinstance(mod, ExplicitModule):
        if mod.size ** lphi.witness_arity <= ENUM_THRESHOLD:
            m = lphi.eq_count
            act, add = mod.act_table, mod.add_table
            zero = mod.zero
            vec = []
            for i in range(m):
                acc = zero
                for r, xj in zip(lphi.b.entries[i], point):
                    acc = add[acc][act[r][xj]]
                vec.append(acc)
            return tuple(vec) in _witness_images(lphi, mod)
        return solve_point(lphi, mod, point)
    return _fg_holds_at(lphi, mod, point)


def _fg_system(lphi: PpFormula, mod: FgAbelianModule):
    """Rows of the integer system A y - B x == 0 modulo the relations.

    Unknown layout: x-block (n*dim), y-block (k*dim), then one slack
    block per equation row spanning the relation lattice.
    """
    m, k, n = lphi.eq_count, lphi.witness_arity, lphi.arity
    dim = mod.dim
    rel = mod.relation_rows()
    width = (n + k) * dim + m * len(rel)
    rows = []
    for i in range(m):
        for c in range(dim):
            row = [0] * width
            for j in range(n):
                row[j * dim + c] = -lphi.b.entries[i][j]
            for j in range(k):
                row[(n + j) * dim + c] = lphi.a.entries[i][j]
            for t, rrow in enumerate(rel):
                row[(n + k) * dim + i * len(rel) + t] = -rrow[c]
            rows.append(row)
    return rows, width


def _evaluate_fg(lphi: PpFormula, mod: FgAbelianModule) -> LatticeSubgroup:
    n = lphi.arity
    dim = mod.dim
    rows, width = _fg_system(lphi, mod)
    ker = intlin.kernel(rows, width)
    projected = [vec[:n * dim] for vec in ker]
    return make_lattice_subgroup(mod, n, projected)


def _fg_holds_at(lphi: PpFormula, mod: FgAbelianModule, point) -> bool:
    m, k, n = lphi.eq_count, lphi.witness_arity, lphi.arity
    dim = mod.dim
    rel = mod.relation_rows()
    width = k * dim + m * len(rel)
    rows, rhs = [], []
    flat = []
    for part in point:
        flat.extend(part)
    for i in range(m):
        for c in range(dim):
            row = [0] * width
            for j in range(k):
                row[j * dim + c] = lphi.a.entries[i][j]
            for t, rrow in enumerate(rel):
                row[k * dim + i * len(rel) + t] = rrow[c]
            rows.append(row)
            acc = 0
            for j in range(n):
                acc += lphi.b.entries[i][j] * flat[j * dim + c]
            rhs.append(acc)
    return intlin.solve(rows, rhs) is not None


# ---------------------------------------------------------------------------
# free realizations

def free_realization(phi: PpFormula):
    """A finitely presented module and tuple that freely realize phi.

    The module is R^(n+k) modulo the left row span of (B | -A); the
    returned tuple is the image of the first n basis vectors.  For every
    psi of matching arity, phi <= psi iff psi holds of the tuple.
    """
    lphi = as_left(phi)
    ring = lphi.ring
    n, k = lphi.arity, lphi.witness_arity
    if isinstance(ring, IntegerRing):
        rel = _relation_rows_int(lphi)
        mod, images = fg_abelian_from_presentation(rel, n + k,
                                                   label=f"free realization")
        return mod, tuple(images[:n])
    return _free_realization_finite(lphi)


def _relation_rows_int(lphi):
    n, k = lphi.arity, lphi.witness_arity
    rows = []
    for i in range(lphi.eq_count):
        rows.append([lphi.b.entries[i][j] for j in range(n)]
                    + [-lphi.a.entries[i][j] for j in range(k)])
    return rows


def _presentation_span(lphi, cap=COSET_CAP):
    """The left submodule N = {s (B|-A) : s in R^m} as a set of tuples."""
    ring = lphi.ring
    m = lphi.eq_count
    n, k = lphi.arity, lphi.witness_arity
    rel_rows = []
    for i in range(m):
        rel_rows.append(tuple(lphi.b.entries[i])
                        + tuple(ring.neg(e) for e in lphi.a.entries[i]))
    if ring.size ** m > cap:
        raise CapExceeded(
            f"presentation span needs {ring.size ** m} combinations")
    span = set()
    width = n + k
    for s in itertools.product(ring.elements(), repeat=m):
        vec = [ring.zero] * width
        for coeff, row in zip(s, rel_rows):
            for j, e in enumerate(row):
                vec[j] = ring.add(vec[j], ring.mul(coeff, e))
        span.add(tuple(vec))
    return span


#: largest explicit quotient for which addition tables are built
TABLE_CAP = 1024


def _free_realization_finite(lphi, cap=COSET_CAP):
    ring = lphi.ring
    n, k = lphi.arity, lphi.witness_arity
    width = n + k
    total = ring.size ** width
    if total > cap:
        raise CapExceeded(
            f"coset enumeration needs {total} ambient elements (cap {cap})")
    span = _presentation_span(lphi, cap)
    if total // len(span) > TABLE_CAP:
        raise CapExceeded(
            f"quotient has {total // len(span)} elements, too many for tables")
    # canonical representative: the least tuple in each coset
    rep_of = {}
    for vec in itertools.product(ring.elements(), repeat=width):
        if vec in rep_of:
            continue
        coset = sorted(tuple(ring.add(a, b) for a, b in zip(vec, off))
                       for off in span)
        rep = coset[0]
        for member in coset:
            rep_of[member] = rep
    reps = sorted(set(rep_of.values()))
    index = {rep: i for i, rep in enumerate(reps)}
    add = [[index[rep_of[tuple(ring.add(a, b) for a, b in zip(u, v))]]
            for v in reps] for u in reps]
    act = [[index[rep_of[tuple(ring.mul(r, a) for a in u)]] for u in reps]
           for r in ring.elements()]
    names = ["(" + ",".join(ring.element_name(e) for e in rep) + ")"
             for rep in reps]
    mod = ExplicitModule(ring, names, add, act, side=LEFT, check=False,
                         label="free realization")
    unit = []
    for i in range(n):
        vec = tuple(ring.one if j == i else ring.zero for j in range(width))
        unit.append(index[rep_of[vec]])
    return mod, tuple(unit)


# ---------------------------------------------------------------------------
# flatness / absolute purity defects, divisibility, purity

def _scalar_multiples(mod: ExplicitModule, scalars):
    """The subgroup generated by {r*a : r in scalars, a in M}."""
    gens = [(mod.act(r, a),) for r in scalars for a in mod.elements()]
    return explicit_subgroup(mod, closure(mod, gens, 1), 1)


def flat_defect(phi: PpFormula, module):
    """(phi(M), phi(R)*M): equality at every unary phi characterizes flat.

    The second component is always contained in the first.
    """
    if phi.arity != 1:
        raise ArityError("flat defect is defined for unary formulas")
    if phi.side != LEFT:
        raise SideError("flat defect applies to left formulas")
    value = evaluate(phi, module)
    ring = phi.ring
    if isinstance(ring, IntegerRing):
        if not isinstance(module, FgAbelianModule):
            raise UnsupportedRingError("Z-modules are FgAbelian here")
        gen = _ideal_generator(phi)
        scaled = [[gen * e for e in row] for row in intlin.identity(
            module.dim * 1)]
        sub = make_lattice_subgroup(module, 1, scaled if gen else [])
        return value, sub
    reg = regular_module(ring, LEFT)
    ideal = evaluate(phi, reg)
    scalars = [v[0] for v in ideal.elements]
    return value, _scalar_multiples(module, scalars)


def _ideal_generator(phi: PpFormula) -> int:
    """phi(Z) as a nonnegative generator (phi unary over Z)."""
    from .modules import regular_fg_module
    sub = evaluate(phi, regular_fg_module())
    basis = sub.basis
    return abs(basis[0][0]) if basis else 0


def annihilator_subgroup(module: ExplicitModule, scalars) -> ExplicitSubgroup:
    """{a in M : s*a = 0 for all s in scalars}."""
    out = [(a,) for a in module.elements()
           if all(module.act(s, a) == module.zero for s in scalars)]
    return explicit_subgroup(module, out, 1)


def abspure_defect(phi: PpFormula, module):
    """(phi(M), ann_M(D phi(R_R))): equality characterizes absolute purity.

    Restricted to finite rings: the dual is evaluated in the regular
    right module by exhaustion.  The first component is always contained
    in the second.
    """
    if phi.arity != 1:
        raise ArityError("absolute-purity defect is defined for unary formulas")
    if phi.side != LEFT:
        raise SideError("absolute-purity defect applies to left formulas")
    ring = phi.ring
    if not ring.is_finite:
        raise UnsupportedRingError(
            "the absolute-purity criterion is evaluated over finite rings only")
    value = evaluate(phi, module)
    dual_value = evaluate(dual(phi), regular_module(ring, RIGHT))
    scalars = [v[0] for v in dual_value.elements]
    return value, annihilator_subgroup(module, scalars)


def is_divisible(module) -> tuple[bool, tuple | None]:
    """Divisibility test: every a killed by the left annihilator of r
    lies in rM.  Returns (verdict, witness (r, a) on failure)."""
    ring = module.ring
    if isinstance(module, ExplicitModule):
        elems = list(ring.elements())
        for r in elems:
            killers = [t for t in elems if ring.mul(t, r) == ring.zero]
            r_image = {module.act(r, a) for a in module.elements()}
            for a in module.elements():
                if all(module.act(t, a) == module.zero for t in killers):
                    if a not in r_image:
                        return False, (r, a)
        return True, None
    if isinstance(module, FgAbelianModule):
        if module.rank:
            raise UnsupportedRingError(
                "divisibility is checked on finite modules only")
        if module.size == 1:
            return True, None
        exponent = module.divisors[-1] if module.divisors else 1
        for r in range(2, exponent + 1):
            image = {tuple((r * c) % d for c, d in zip(e, module.divisors))
                     for e in module.elements()}
            for a in module.elements():
                if a not in image:
                    return False, (r, a)
        return True, None
    raise UnsupportedRingError("unsupported module kind")


def is_pure_submodule(sub: ExplicitSubgroup, bound: int):
    """Check phi(N) == N and phi(M) for all unary phi of size <= bound.

    Returns ("pure", bound) or ("counterexample", phi).  This is a
    semi-decision; purity beyond the bound is not certified.
    """
    from .formulas import enumerate_unary_formulas
    from .modules import submodule_as_module
    parent = sub.module
    ring = parent.ring
    inner = submodule_as_module(sub)
    inner_names = [e[0] for e in sub.elements]
    for phi in enumerate_unary_formulas(ring, bound):
        inner_val = evaluate(phi, inner)
        inner_in_parent = {(inner_names[e[0]],) for e in inner_val.elements}
        parent_val = evaluate(phi, parent)
        restricted = {e for e in parent_val.elements
                      if e[0] in set(inner_names)}
        if inner_in_parent != restricted:
            return "counterexample", phi
    return "pure", bound
