"""Computable rings and exact matrix arithmetic over them.

Three ring classes are supported: the integers, the integers modulo n,
and finite rings given by explicit operation tables.  Table rings are
verified exhaustively at load time (associativity, distributivity,
identities, additive group laws), and commutativity is detected and
stored but never assumed by any algorithm.

Annihilators come back as explicit element lists over finite rings and
as Hermite-normal-form lattice bases over the integers, so subgroup
equality is always a plain comparison.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass

_VAR_NAME = re.compile(r"x\d*\Z")

from . import intlin
from .errors import DimensionError, RingFormatError, UnsupportedRingError

#: Default cap on the element count of an explicit table ring.
TABLE_SIZE_CAP = 64


class IntegerRing:
    """The ring of integers; elements are Python ints."""

    kind = "integers"
    is_finite = False
    commutative = True
    zero = 0
    one = 1

    def __repr__(self):
        return "Z"

    name = "Z"

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def coerce(self, a):
        if not isinstance(a, int):
            raise RingFormatError(f"not an integer: {a!r}")
        return a

    def elements(self):
        raise UnsupportedRingError("Z is infinite")

    def element_name(self, a):
        return str(a)

    def element_from_token(self, tok):
        try:
            return int(tok)
        except ValueError:
            raise RingFormatError(f"{tok!r} is not an integer scalar")

    def random_element(self, rng):
        return rng.randint(-5, 5)

    def opposite(self):
        return self


ZZ = IntegerRing()


class ModularRing:
    """Z/nZ with elements 0..n-1."""

    kind = "integers_mod_n"
    is_finite = True
    commutative = True

    def __init__(self, n: int):
        if n < 2:
            raise RingFormatError("modulus must be at least 2")
        self.n = n
        self.zero = 0
        self.one = 1 % n
        self.name = f"Z/{n}"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.n == self.n

    def __hash__(self):
        return hash(("Z/", self.n))

    @property
    def size(self):
        return self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def coerce(self, a):
        if not isinstance(a, int):
            raise RingFormatError(f"not an integer: {a!r}")
        return a % self.n

    def elements(self):
        return range(self.n)

    def element_name(self, a):
        return str(a)

    def element_from_token(self, tok):
        try:
            return int(tok) % self.n
        except ValueError:
            raise RingFormatError(f"{tok!r} is not a scalar of {self.name}")

    def random_element(self, rng):
        return rng.randrange(self.n)

    def opposite(self):
        return self


class TableRing:
    """A finite ring given by explicit addition and multiplication tables.

    Elements are the indices 0..q-1; `names` carries their display names.
    All ring axioms are checked exhaustively on construction unless
    `check=False` (used internally for opposites, which are valid by
    construction).
    """

    kind = "finite_table"
    is_finite = True

    def __init__(self, names, add_table, mul_table, zero, one,
                 check=True, cap=None, ring_name=None):
        q = len(names)
        cap = TABLE_SIZE_CAP if cap is None else cap
        if check and q > cap:
            raise RingFormatError(
                f"table ring has {q} elements, exceeding the cap of {cap}")
        if len(set(names)) != q:
            raise RingFormatError("element names must be distinct")
        for nm in names:
            if _VAR_NAME.match(nm):
                raise RingFormatError(
                    f"element name {nm!r} collides with formula variables")
        self.names = list(names)
        self.add_table = [list(r) for r in add_table]
        self.mul_table = [list(r) for r in mul_table]
        self.zero = zero
        self.one = one
        self.q = q
        self.name = ring_name or f"table ring ({q} elements)"
        self._index = {nm: i for i, nm in enumerate(self.names)}
        self._opposite = None
        if check:
            self._verify()
        self.neg_table = self._negatives()
        self.commutative = all(
            self.mul_table[i][j] == self.mul_table[j][i]
            for i in range(q) for j in range(i))

    def __repr__(self):
        return self.name

    @property
    def size(self):
        return self.q

    def _verify(self):
        q = self.q
        for tbl, label in ((self.add_table, "add"), (self.mul_table, "mul")):
            if len(tbl) != q or any(len(r) != q for r in tbl):
                raise RingFormatError(f"{label} table is not {q}x{q}")
            for r in tbl:
                for e in r:
                    if not isinstance(e, int) or not 0 <= e < q:
                        raise RingFormatError(
                            f"{label} table entry {e!r} is not an element index")
        if not 0 <= self.zero < q or not 0 <= self.one < q:
            raise RingFormatError("zero/one are not element indices")
        add, mul = self.add_table, self.mul_table
        rng_q = range(q)
        for a in rng_q:
            if add[a][self.zero] != a:
                raise RingFormatError(f"zero is not additively neutral at {a}")
            if mul[a][self.one] != a or mul[self.one][a] != a:
                raise RingFormatError(f"one is not multiplicatively neutral at {a}")
            if not any(add[a][b] == self.zero for b in rng_q):
                raise RingFormatError(f"element {a} has no additive inverse")
            for b in rng_q:
                if add[a][b] != add[b][a]:
                    raise RingFormatError(f"addition is not commutative at ({a},{b})")
        for a in rng_q:
            add_a = add[a]
            mul_a = mul[a]
            for b in rng_q:
                ab_sum = add_a[b]
                ab_prod = mul_a[b]
                mul_b = mul[b]
                for c in rng_q:
                    if add[ab_sum][c] != add_a[add[b][c]]:
                        raise RingFormatError(
                            f"addition is not associative at ({a},{b},{c})")
                    if mul[ab_prod][c] != mul_a[mul_b[c]]:
                        raise RingFormatError(
                            f"multiplication is not associative at ({a},{b},{c})")
                    if mul_a[add[b][c]] != add[ab_prod][mul_a[c]]:
                        raise RingFormatError(
                            f"left distributivity fails at ({a},{b},{c})")
                    if mul[add_a[b]][c] != add[mul_a[c]][mul_b[c]]:
                        raise RingFormatError(
                            f"right distributivity fails at ({a},{b},{c})")

    def _negatives(self):
        neg = [None] * self.q
        for a in range(self.q):
            for b in range(self.q):
                if self.add_table[a][b] == self.zero:
                    neg[a] = b
                    break
        return neg

    def add(self, a, b):
        return self.add_table[a][b]

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def coerce(self, a):
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise RingFormatError(f"not an element index: {a!r}")
        return a

    def elements(self):
        return range(self.q)

    def element_name(self, a):
        return self.names[a]

    def element_from_token(self, tok):
        if tok in self._index:
            return self._index[tok]
        raise RingFormatError(f"{tok!r} is not an element of {self.name}")

    def random_element(self, rng):
        return rng.randrange(self.q)

    def opposite(self):
        if self._opposite is None:
            q = self.q
            op = TableRing(
                self.names, self.add_table,
                [[self.mul_table[j][i] for j in range(q)] for i in range(q)],
                self.zero, self.one, check=False,
                ring_name=self.name + " (opposite)")
            op._opposite = self
            self._opposite = op
        return self._opposite


Ring = IntegerRing | ModularRing | TableRing


@dataclass(frozen=True)
class RingMatrix:
    """An immutable matrix over one of the supported rings.

    The column count is stored explicitly so that matrices with zero
    rows or zero columns keep their shape through transposition and
    multiplication.
    """

    ring: Ring
    entries: tuple  # tuple of row tuples
    ncols: int = -1

    def __post_init__(self):
        if self.ncols < 0:
            object.__setattr__(
                self, "ncols", len(self.entries[0]) if self.entries else 0)

    @staticmethod
    def from_rows(ring, rows, cols=None):
        rows = [tuple(ring.coerce(e) for e in row) for row in rows]
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise DimensionError("ragged matrix rows")
        elif cols is None:
            raise DimensionError("empty matrix needs an explicit column count")
        return RingMatrix(ring, tuple(rows), cols)

    @staticmethod
    def identity(ring, n):
        return RingMatrix(ring, tuple(
            tuple(ring.one if i == j else ring.zero for j in range(n))
            for i in range(n)), n)

    @staticmethod
    def zero_matrix(ring, rows, cols):
        return RingMatrix(ring, tuple(
            tuple(ring.zero for _ in range(cols)) for _ in range(rows)), cols)

    @property
    def rows(self):
        return len(self.entries)

    @property
    def cols(self):
        return self.ncols

    def row(self, i):
        return self.entries[i]

    def transpose(self):
        if not self.entries:
            return RingMatrix(self.ring, tuple(() for _ in range(self.ncols)), 0)
        return RingMatrix(self.ring, tuple(zip(*self.entries)),
                          len(self.entries))

    def is_zero(self):
        z = self.ring.zero
        return all(e == z for row in self.entries for e in row)

    def nonzero_count(self):
        z = self.ring.zero
        return sum(1 for row in self.entries for e in row if e != z)

    def mul(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        ring = self.ring
        out = []
        for row in self.entries:
            new_row = []
            for j in range(other.cols):
                acc = ring.zero
                for e, orow in zip(row, other.entries):
                    acc = ring.add(acc, ring.mul(e, orow[j]))
                new_row.append(acc)
            out.append(tuple(new_row))
        return RingMatrix(ring, tuple(out), other.cols)

    def scale_right(self, r):
        ring = self.ring
        return RingMatrix(ring, tuple(
            tuple(ring.mul(e, r) for e in row) for row in self.entries),
            self.ncols)

    def scale_left(self, r):
        ring = self.ring
        return RingMatrix(ring, tuple(
            tuple(ring.mul(r, e) for e in row) for row in self.entries),
            self.ncols)

    def to_int_rows(self):
        return [list(r) for r in self.entries]

    def __str__(self):
        name = self.ring.element_name
        return "[" + "; ".join(
            ", ".join(name(e) for e in row) for row in self.entries) + "]"


# ---------------------------------------------------------------------------
# vector subgroups (annihilator results)

@dataclass(frozen=True)
class FiniteVectorGroup:
    """An additive subgroup of R^length over a finite ring, listed in full."""

    ring: Ring
    length: int
    vectors: tuple  # sorted tuple of element-index tuples

    def contains(self, vec):
        return tuple(vec) in set(self.vectors)

    def is_zero(self):
        return len(self.vectors) == 1

    def __len__(self):
        return len(self.vectors)

    def __str__(self):
        name = self.ring.element_name
        return "{" + ", ".join(
            "(" + ",".join(name(e) for e in v) + ")" for v in self.vectors) + "}"


@dataclass(frozen=True)
class IntegerLatticeGroup:
    """A subgroup of Z^length given by a canonical HNF basis."""

    length: int
    basis: tuple  # tuple of basis row tuples, HNF

    def contains(self, vec):
        return intlin.lat_member([list(r) for r in self.basis], list(vec))

    def is_zero(self):
        return not self.basis

    def __str__(self):
        if not self.basis:
            return "{0}"
        return "lattice" + str([list(r) for r in self.basis])


def _vec_mat_ring(ring, vec, mat: RingMatrix):
    out = []
    for j in range(mat.cols):
        acc = ring.zero
        for e, row in zip(vec, mat.entries):
            acc = ring.add(acc, ring.mul(e, row[j]))
        out.append(acc)
    return tuple(out)


def _mat_vec_ring(ring, mat: RingMatrix, vec):
    out = []
    for row in mat.entries:
        acc = ring.zero
        for e, x in zip(row, vec):
            acc = ring.add(acc, ring.mul(e, x))
        out.append(acc)
    return tuple(out)


def left_annihilator(mat: RingMatrix):
    """All row vectors t with t @ mat == 0.

    Finite rings: exhaustive scan over R^rows, returned as an explicit,
    sorted element list.  Integers: the kernel lattice in Hermite normal
    form.
    """
    ring = mat.ring
    m = mat.rows
    if ring.is_finite:
        zero_row = (ring.zero,) * mat.cols
        found = [v for v in itertools.product(ring.elements(), repeat=m)
                 if _vec_mat_ring(ring, v, mat) == zero_row]
        return FiniteVectorGroup(ring, m, tuple(sorted(found)))
    basis = intlin.left_kernel(mat.to_int_rows(), m)
    return IntegerLatticeGroup(m, tuple(tuple(r) for r in basis))


def right_annihilator(mat: RingMatrix):
    """All column vectors x with mat @ x == 0 (mirror of left_annihilator)."""
    ring = mat.ring
    n = mat.cols
    if ring.is_finite:
        zero_col = (ring.zero,) * mat.rows
        found = [v for v in itertools.product(ring.elements(), repeat=n)
                 if _mat_vec_ring(ring, mat, v) == zero_col]
        return FiniteVectorGroup(ring, n, tuple(sorted(found)))
    basis = intlin.kernel(mat.to_int_rows(), n)
    return IntegerLatticeGroup(n, tuple(tuple(r) for r in basis))


@dataclass(frozen=True)
class RegularSets:
    """The multiplicative sets of non-zero-divisors of a ring.

    Over the integers all three are the symbolic descriptor "nonzero".
    """

    s_left: tuple | str
    s_right: tuple | str
    s_reg: tuple | str


def regular_sets(ring) -> RegularSets:
    if isinstance(ring, IntegerRing):
        return RegularSets("nonzero", "nonzero", "nonzero")
    left, right = [], []
    elems = list(ring.elements())
    for r in elems:
        if all(ring.mul(t, r) != ring.zero for t in elems if t != ring.zero):
            left.append(r)
        if all(ring.mul(r, t) != ring.zero for t in elems if t != ring.zero):
            right.append(r)
    reg = tuple(sorted(set(left) & set(right)))
    return RegularSets(tuple(left), tuple(right), reg)


# ---------------------------------------------------------------------------
# ring file format: {"elements": [...], "zero": name, "one": name,
#                    "add": [[names]], "mul": [[names]]}

def table_ring_from_dict(data, ring_name=None) -> TableRing:
    try:
        names = list(data["elements"])
        zero = data["zero"]
        one = data["one"]
        add_names = data["add"]
        mul_names = data["mul"]
    except (KeyError, TypeError) as exc:
        raise RingFormatError(f"missing ring field: {exc}")
    index = {nm: i for i, nm in enumerate(names)}
    if zero not in index or one not in index:
        raise RingFormatError("zero/one are not listed elements")

    def idx_table(tbl, label):
        out = []
        for row in tbl:
            try:
                out.append([index[nm] for nm in row])
            except KeyError as exc:
                raise RingFormatError(f"unknown element {exc} in {label} table")
        return out

    return TableRing(names, idx_table(add_names, "add"),
                     idx_table(mul_names, "mul"),
                     index[zero], index[one], ring_name=ring_name)


def table_ring_to_dict(ring: TableRing) -> dict:
    nm = ring.names
    return {
        "elements": list(nm),
        "zero": nm[ring.zero],
        "one": nm[ring.one],
        "add": [[nm[e] for e in row] for row in ring.add_table],
        "mul": [[nm[e] for e in row] for row in ring.mul_table],
    }


def load_ring_file(path) -> TableRing:
    with open(path) as fh:
        data = json.load(fh)
    return table_ring_from_dict(data, ring_name=str(path))
