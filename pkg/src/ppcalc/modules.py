"""Concrete modules and their subgroups.

Two representations:

* `ExplicitModule`: a finite module over a finite ring, with element,
  addition, and scalar-action tables.  Module axioms are verified
  exhaustively at load time.  Subgroups are explicit sorted element
  lists (tuples of elements for arity > 1).

* `FgAbelianModule`: a finitely generated abelian group over Z in Smith
  canonical form Z^rank + Z/d1 + ... + Z/dt with d1 | d2 | ... .
  Subgroups of M^n are integer lattices between the relation lattice and
  Z^(n*t'), kept in Hermite normal form so equality is decidable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from . import intlin
from .errors import (CapExceeded, ModuleFormatError, SideError,
                     UnsupportedRingError)
from .rings import ZZ, IntegerRing, ModularRing, Ring

#: cap on explicit-module construction (coset enumeration and products)
COSET_CAP = 20000

LEFT, RIGHT = "left", "right"


class ExplicitModule:
    """A finite module given by tables; elements are indices 0..N-1."""

    kind = "explicit"

    def __init__(self, ring, names, add_table, act_table, side=LEFT,
                 check=True, label=None):
        if not ring.is_finite:
            raise UnsupportedRingError(
                "explicit modules require a finite ring")
        self.ring = ring
        self.side = side
        self.names = list(names)
        self.add_table = [list(r) for r in add_table]
        self.act_table = [list(r) for r in act_table]
        self.size = len(names)
        self.label = label or f"module ({self.size} elements)"
        self._zero = None
        if check:
            self._verify()
        else:
            self._find_zero()
        self.neg_table = self._negatives()
        self._opposite_view = None

    def __repr__(self):
        return self.label

    @property
    def zero(self):
        return self._zero

    def _find_zero(self):
        for z in range(self.size):
            if all(self.add_table[a][z] == a for a in range(self.size)):
                self._zero = z
                return
        raise ModuleFormatError("no additive identity found")

    def _verify(self):
        n = self.size
        ring = self.ring
        if len(self.add_table) != n or any(len(r) != n for r in self.add_table):
            raise ModuleFormatError("addition table is not square")
        q = ring.size
        if len(self.act_table) != q or any(len(r) != n for r in self.act_table):
            raise ModuleFormatError("action table must be (ring size) x (module size)")
        for tbl in (self.add_table, self.act_table):
            for row in tbl:
                for e in row:
                    if not isinstance(e, int) or not 0 <= e < n:
                        raise ModuleFormatError(
                            f"table entry {e!r} is not an element index")
        add = self.add_table
        self._find_zero()
        z = self._zero
        rng_n = range(n)
        for a in rng_n:
            if not any(add[a][b] == z for b in rng_n):
                raise ModuleFormatError(f"element {a} has no additive inverse")
            for b in rng_n:
                if add[a][b] != add[b][a]:
                    raise ModuleFormatError("addition is not commutative")
                for c in rng_n:
                    if add[add[a][b]][c] != add[a][add[b][c]]:
                        raise ModuleFormatError("addition is not associative")
        act = self.act_table
        if act[ring.one] != list(rng_n):
            raise ModuleFormatError("1 does not act as the identity")
        for r in ring.elements():
            for a in rng_n:
                for b in rng_n:
                    if act[r][add[a][b]] != add[act[r][a]][act[r][b]]:
                        raise ModuleFormatError("action is not additive")
        for r in ring.elements():
            for s in ring.elements():
                rs = ring.mul(r, s) if self.side == LEFT else ring.mul(s, r)
                plus = ring.add(r, s)
                for a in rng_n:
                    if act[rs][a] != act[r][act[s][a]]:
                        raise ModuleFormatError(
                            "action is not multiplicative (check the side)")
                    if act[plus][a] != add[act[r][a]][act[s][a]]:
                        raise ModuleFormatError("action is not distributive")

    def _negatives(self):
        neg = [None] * self.size
        for a in range(self.size):
            for b in range(self.size):
                if self.add_table[a][b] == self._zero:
                    neg[a] = b
                    break
        return neg

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def act(self, r, a):
        """r*a for left modules, a*r for right modules."""
        return self.act_table[r][a]

    def elements(self):
        return range(self.size)

    def element_name(self, a):
        return self.names[a]

    def opposite_view(self) -> "ExplicitModule":
        """The same data viewed as a module over the opposite ring.

        A right R-module is exactly a left module over R^op, so this is
        how right-side evaluation is reduced to the left-side code path.
        """
        if self._opposite_view is None:
            view = ExplicitModule(
                self.ring.opposite(), self.names, self.add_table,
                self.act_table, side=LEFT if self.side == RIGHT else RIGHT,
                check=False, label=self.label + " (opposite view)")
            view._opposite_view = self
            self._opposite_view = view
        return self._opposite_view


class FgAbelianModule:
    """Z^rank + Z/d1 + ... + Z/dt over Z, divisors in divisibility order.

    Elements are integer coordinate vectors of length rank + t (free
    coordinates first); torsion coordinates are reduced modulo their
    divisor.  The relation lattice is spanned by d_i times the i-th
    torsion unit vector.
    """

    kind = "fg_abelian"
    ring = ZZ
    side = LEFT

    def __init__(self, rank, divisors, label=None):
        if rank < 0:
            raise ModuleFormatError("rank must be nonnegative")
        divisors = list(divisors)
        for d, e in zip(divisors, divisors[1:]):
            if e % d:
                raise ModuleFormatError(
                    "divisors must form a divisibility chain")
        if any(d < 2 for d in divisors):
            raise ModuleFormatError("divisors must be at least 2")
        self.rank = rank
        self.divisors = divisors
        self.dim = rank + len(divisors)
        self.label = label or self._default_label()

    def _default_label(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.divisors]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.label

    @property
    def size(self):
        if self.rank:
            return None
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def relation_rows(self, arity=1):
        """Relation lattice of M^arity inside Z^(arity*dim)."""
        rows = []
        width = arity * self.dim
        for block in range(arity):
            for i, d in enumerate(self.divisors):
                row = [0] * width
                row[block * self.dim + self.rank + i] = d
                rows.append(row)
        return rows

    def reduce(self, vec):
        out = list(vec)
        for i, d in enumerate(self.divisors):
            out[self.rank + i] %= d
        return tuple(out)

    def elements(self):
        if self.rank:
            raise UnsupportedRingError("module is infinite")
        ranges = [range(d) for d in self.divisors]
        return (tuple(v) for v in itertools.product(*ranges))

    def zero_vec(self):
        return (0,) * self.dim


ConcreteModule = ExplicitModule | FgAbelianModule


@dataclass(frozen=True)
class ExplicitSubgroup:
    """A subgroup of M^arity for an explicit module, listed in full."""

    module: ExplicitModule
    arity: int
    elements: tuple  # sorted tuple of arity-tuples of element indices

    def is_zero(self):
        return len(self.elements) == 1

    def is_all(self):
        return len(self.elements) == self.module.size ** self.arity

    def contains(self, elem):
        return tuple(elem) in self._set()

    def _set(self):
        return set(self.elements)

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        nm = self.module.element_name
        items = ", ".join(
            nm(e[0]) if self.arity == 1 else
            "(" + ",".join(nm(x) for x in e) + ")" for e in self.elements)
        return "{" + items + "}"


@dataclass(frozen=True)
class LatticeSubgroup:
    """A subgroup of M^arity for an fg abelian module, as an HNF lattice."""

    module: FgAbelianModule
    arity: int
    basis: tuple  # HNF rows spanning a lattice containing the relations

    def width(self):
        return self.arity * self.module.dim

    def is_zero(self):
        rel = intlin.hnf(self.module.relation_rows(self.arity), self.width())
        return list(map(list, self.basis)) == rel

    def is_all(self):
        return intlin.lat_eq(list(map(list, self.basis)),
                             intlin.identity(self.width()), self.width())

    def contains(self, vec):
        flat = []
        for part in vec:
            if isinstance(part, int):
                flat.append(part)
            else:
                flat.extend(part)
        return intlin.lat_member(list(map(list, self.basis)), flat)

    def invariants(self):
        """Structure of the subgroup as (free_rank, divisors)."""
        return intlin.quotient_invariants(
            list(map(list, self.basis)),
            self.module.relation_rows(self.arity), self.width())

    def __len__(self):
        free, div = self.invariants()
        if free:
            raise UnsupportedRingError("subgroup is infinite")
        out = 1
        for d in div:
            out *= d
        return out

    def __str__(self):
        free, div = self.invariants()
        parts = ["Z"] * free + [f"Z/{d}" for d in div]
        return " + ".join(parts) if parts else "0"


Subgroup = ExplicitSubgroup | LatticeSubgroup


def make_lattice_subgroup(module, arity, rows) -> LatticeSubgroup:
    width = arity * module.dim
    rel = module.relation_rows(arity)
    basis = intlin.hnf(list(rows) + rel, width)
    return LatticeSubgroup(module, arity, tuple(tuple(r) for r in basis))


def closure(module: ExplicitModule, generators, arity=1) -> tuple:
    """Additive closure of tuples of module elements, sorted."""
    zero = (module.zero,) * arity
    seen = {zero}
    frontier = [zero]
    gens = [tuple(g) for g in generators]
    add = module.add_table
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(add[a][b] for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen))


def explicit_subgroup(module, elements, arity=1) -> ExplicitSubgroup:
    elems = sorted({tuple(e) for e in elements} | {(module.zero,) * arity})
    return ExplicitSubgroup(module, arity, tuple(elems))


# ---------------------------------------------------------------------------
# builders

def regular_module(ring, side=LEFT) -> ExplicitModule:
    """The ring as a module over itself (finite rings)."""
    if not ring.is_finite:
        raise UnsupportedRingError("use FgAbelianModule for Z")
    elems = list(ring.elements())
    add = [[ring.add(a, b) for b in elems] for a in elems]
    if side == LEFT:
        act = [[ring.mul(r, a) for a in elems] for r in elems]
    else:
        act = [[ring.mul(a, r) for a in elems] for r in elems]
    return ExplicitModule(ring, [ring.element_name(a) for a in elems],
                          add, act, side=side, check=False,
                          label=f"{ring!r} as {side} module")


def regular_fg_module() -> FgAbelianModule:
    return FgAbelianModule(1, [], label="Z as module")


def cyclic_product_module(ring, divisors, side=LEFT) -> ExplicitModule:
    """Z/d1 + ... + Z/dt as a module over a Z/n ring (needs exp | n)."""
    if not isinstance(ring, ModularRing):
        raise UnsupportedRingError(
            "cyclic products are built over Z/n rings; use FgAbelianModule over Z")
    size = 1
    for d in divisors:
        size *= d
    if size > COSET_CAP:
        raise CapExceeded(f"module would have {size} elements")
    elems = list(itertools.product(*[range(d) for d in divisors]))
    index = {e: i for i, e in enumerate(elems)}

    def addf(x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, divisors))

    add = [[index[addf(x, y)] for y in elems] for x in elems]
    act = [[index[tuple((r * a) % d for a, d in zip(x, divisors))]
            for x in elems] for r in ring.elements()]
    names = ["(" + ",".join(map(str, e)) + ")" for e in elems]
    label = " + ".join(f"Z/{d}" for d in divisors) or "0"
    return ExplicitModule(ring, names, add, act, side=side, check=True,
                          label=label)


def submodule_as_module(sub: ExplicitSubgroup) -> ExplicitModule:
    """Turn a ring-action-closed unary subgroup into a module of its own."""
    if sub.arity != 1:
        raise UnsupportedRingError("only unary subgroups become modules")
    parent = sub.module
    elems = [e[0] for e in sub.elements]
    index = {e: i for i, e in enumerate(elems)}
    for e in elems:
        for r in parent.ring.elements():
            if parent.act(r, e) not in index:
                raise ModuleFormatError(
                    "subgroup is not closed under the ring action")
    add = [[index[parent.add(a, b)] for b in elems] for a in elems]
    act = [[index[parent.act(r, a)] for a in elems]
           for r in parent.ring.elements()]
    names = [parent.element_name(e) for e in elems]
    return ExplicitModule(parent.ring, names, add, act, side=parent.side,
                          check=False, label=f"submodule of {parent.label}")


def fg_abelian_from_presentation(relation_rows, dim, label=None):
    """Z^dim modulo the row span, in Smith canonical form.

    Returns (module, images) where images[i] is the canonical coordinate
    vector of the i-th original generator.
    """
    if not relation_rows:
        mod = FgAbelianModule(dim, [], label=label)
        return mod, [tuple(intlin.identity(dim)[i]) for i in range(dim)]
    res = intlin.snf([list(r) for r in relation_rows])
    diag = list(res.diag) + [0] * (dim - len(res.diag))
    free_pos = [j for j in range(dim) if j >= len(res.diag) or diag[j] == 0]
    tors_pos = [j for j in range(dim) if j < len(res.diag) and diag[j] > 1]
    divisors = [diag[j] for j in tors_pos]
    mod = FgAbelianModule(len(free_pos), divisors, label=label)
    images = []
    for i in range(dim):
        # generator e_i has coordinates row i of V in the new basis
        full = res.v[i]
        coords = [full[j] for j in free_pos] + \
                 [full[j] % diag[j] for j in tors_pos]
        images.append(tuple(coords))
    return mod, images


# ---------------------------------------------------------------------------
# module files and the "Z/2 + Z/4" shorthand

def parse_divisor_shorthand(text):
    parts = [p.strip() for p in text.split("+")]
    divisors = []
    for p in parts:
        if not p.upper().startswith("Z/"):
            raise ModuleFormatError(f"cannot read summand {p!r}")
        try:
            divisors.append(int(p[2:]))
        except ValueError:
            raise ModuleFormatError(f"cannot read summand {p!r}")
    return divisors


def module_from_dict(data, ring) -> ConcreteModule:
    if "fg_abelian" in data:
        if not isinstance(ring, IntegerRing):
            raise ModuleFormatError("fg_abelian modules require the ring Z")
        spec = data["fg_abelian"]
        return FgAbelianModule(spec.get("rank", 0), spec.get("divisors", []))
    if "explicit" in data:
        spec = data["explicit"]
        names = spec["elements"]
        index = {nm: i for i, nm in enumerate(names)}
        add = [[index[e] for e in row] for row in spec["add"]]
        act_raw = spec["act"]
        act = [[index[e] for e in row] for row in act_raw]
        side = data.get("side", LEFT)
        return ExplicitModule(ring, names, add, act, side=side)
    raise ModuleFormatError("module file needs 'fg_abelian' or 'explicit'")


def load_module_file(path, ring) -> ConcreteModule:
    with open(path) as fh:
        data = json.load(fh)
    return module_from_dict(data, ring)


def module_from_shorthand(text, ring, side=LEFT) -> ConcreteModule:
    divisors = parse_divisor_shorthand(text)
    if isinstance(ring, IntegerRing):
        # normalize to a divisibility chain via elementary divisors
        rows = [[0] * len(divisors) for _ in divisors]
        for i, d in enumerate(divisors):
            rows[i][i] = d
        mod, _ = fg_abelian_from_presentation(rows, len(divisors), label=text)
        return mod
    return cyclic_product_module(ring, divisors, side=side)
