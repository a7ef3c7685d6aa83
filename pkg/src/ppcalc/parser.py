"""Surface syntax for pp formulas.

Grammar (whitespace insensitive)::

    formula  := sum
    sum      := conj {"+" conj}
    conj     := atom {"&" atom}
    atom     := "(" formula ")"
              | "[" rows "]" "|" "[" rows "]" varlist      (matrix form)
              | scalar "|" term                            (r|sx)
              | term "=" "0"                               (sx = 0)
              | var "=" var                                (x = x, same var)
    term     := scalar? var
    varlist  := var | "(" var {"," var} ")"
    rows     := entries {";" entries}     entries := scalar {"," scalar}

Scalars are ring element names; for Z and Z/n they are (possibly
negative) integers.  Variables are `x` or `x1`, `x2`, ...; `x` is a
synonym for `x1`.  `&` builds the meet and `+` the join, so parsing
always lands in divisibility normal form.
"""

from __future__ import annotations

import re

from .errors import FormulaParseError
from .formulas import (LEFT, PpFormula, join, make_formula, meet,
                       true_formula)

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<name>[A-Za-z_]\w*)"
                    r"|(?P<sym>[][|&+=();,]))")

_VAR = re.compile(r"x(\d+)?\Z")


class _Tokens:
    def __init__(self, src):
        self.src = src
        self.items = []
        pos = 0
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if not m or m.end() == pos:
                stripped = src[pos:].lstrip()
                if not stripped:
                    break
                raise FormulaParseError(
                    f"unexpected character {stripped[0]!r}", pos)
            self.items.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else (None, None, len(self.src))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise FormulaParseError(f"expected {value!r}, found {val!r}", pos)


def _var_index(tok):
    m = _VAR.match(tok)
    if not m:
        return None
    return int(m.group(1)) if m.group(1) else 1


class _Parser:
    def __init__(self, src, ring, side):
        self.toks = _Tokens(src)
        self.ring = ring
        self.side = side
        self.arity = max(self._scan_arity(), 1)

    def _scan_arity(self):
        best = 0
        for kind, val, _ in self.toks.items:
            if kind == "name":
                idx = _var_index(val)
                if idx:
                    best = max(best, idx)
        return best

    def scalar(self):
        kind, val, pos = self.next_tok = self.toks.next()
        if kind == "num":
            return self.ring.element_from_token(val)
        if kind == "name" and _var_index(val) is None:
            return self.ring.element_from_token(val)
        raise FormulaParseError(f"expected a scalar, found {val!r}", pos)

    def parse(self) -> PpFormula:
        phi = self.sum()
        kind, val, pos = self.toks.peek()
        if kind is not None:
            raise FormulaParseError(f"trailing input {val!r}", pos)
        return phi

    def sum(self):
        phi = self.conj()
        while self.toks.peek()[1] == "+":
            self.toks.next()
            phi = join(phi, self.conj())
        return phi

    def conj(self):
        phi = self.atom()
        while self.toks.peek()[1] == "&":
            self.toks.next()
            phi = meet(phi, self.atom())
        return phi

    def atom(self):
        kind, val, pos = self.toks.peek()
        if val == "(":
            self.toks.next()
            phi = self.sum()
            self.toks.expect(")")
            return phi
        if val == "[":
            return self.matrix_atom()
        # scalar "|" term,  term "=" 0,  var "=" var
        if kind == "name" and _var_index(val) is not None:
            return self.term_atom(coeff=None)
        coeff = self.scalar()
        kind2, val2, pos2 = self.toks.peek()
        if val2 == "|":
            self.toks.next()
            s, var = self.term()
            return self.basic_rd(coeff, s, var)
        return self.term_atom(coeff=coeff)

    def term(self):
        kind, val, pos = self.toks.peek()
        if kind == "name" and _var_index(val) is not None:
            self.toks.next()
            return self.ring.one, _var_index(val) - 1
        coeff = self.scalar()
        kind, val, pos = self.toks.next()
        idx = _var_index(val) if kind == "name" else None
        if idx is None:
            raise FormulaParseError(f"expected a variable, found {val!r}", pos)
        return coeff, idx - 1

    def term_atom(self, coeff):
        kind, val, pos = self.toks.next()
        idx = _var_index(val) if kind == "name" else None
        if idx is None:
            raise FormulaParseError(f"expected a variable, found {val!r}", pos)
        self.toks.expect("=")
        kind2, val2, pos2 = self.toks.next()
        if kind2 == "num" and val2 == "0":
            s = self.ring.one if coeff is None else coeff
            return self.annihilator_atom(s, idx - 1)
        if kind2 == "name" and _var_index(val2) == idx and coeff is None:
            return true_formula(self.ring, self.arity, self.side)
        raise FormulaParseError(
            f"expected 0 or the same variable, found {val2!r}", pos2)

    def basic_rd(self, r, s, var):
        n = self.arity
        ring = self.ring
        b_row = [ring.zero] * n
        b_row[var] = s
        if self.side == LEFT:
            return make_formula(ring, LEFT, [[r]], [b_row], k=1)
        return make_formula(ring, "right", [[r]],
                            [[e] for e in b_row], k=1)

    def annihilator_atom(self, s, var):
        n = self.arity
        ring = self.ring
        b_row = [ring.zero] * n
        b_row[var] = s
        if self.side == LEFT:
            return make_formula(ring, LEFT, [[]], [b_row], k=0)
        return make_formula(ring, "right", [], [[e] for e in b_row], k=0)

    def matrix_rows(self):
        self.toks.expect("[")
        rows = []
        if self.toks.peek()[1] == "]":
            self.toks.next()
            return rows
        while True:
            row = [self.scalar()]
            while self.toks.peek()[1] == ",":
                self.toks.next()
                row.append(self.scalar())
            rows.append(row)
            kind, val, pos = self.toks.next()
            if val == "]":
                break
            if val != ";":
                raise FormulaParseError(f"expected ';' or ']', found {val!r}", pos)
        if any(len(r) != len(rows[0]) for r in rows):
            raise FormulaParseError("ragged matrix rows", self.toks.peek()[2])
        return rows

    def matrix_atom(self):
        a_rows = self.matrix_rows()
        self.toks.expect("|")
        b_rows = self.matrix_rows()
        variables = self.varlist()
        if not b_rows:
            raise FormulaParseError("free-variable matrix cannot be empty",
                                    self.toks.peek()[2])
        if len(b_rows[0]) != len(variables):
            raise FormulaParseError(
                f"matrix has {len(b_rows[0])} columns but {len(variables)} "
                "variables were given", self.toks.peek()[2])
        m = len(b_rows)
        if a_rows and len(a_rows) != m:
            raise FormulaParseError("A and B must have equally many rows",
                                    self.toks.peek()[2])
        k = len(a_rows[0]) if a_rows else 0
        if not a_rows:
            a_rows = [[] for _ in range(m)]
        ring = self.ring
        n = self.arity
        b_full = []
        for row in b_rows:
            full = [ring.zero] * n
            for e, var in zip(row, variables):
                full[var] = ring.add(full[var], e)
            b_full.append(full)
        if self.side == LEFT:
            return make_formula(ring, LEFT, a_rows, b_full, k=k)
        return make_formula(ring, "right",
                            [list(c) for c in zip(*a_rows)] if k else [],
                            [list(c) for c in zip(*b_full)], k=k)

    def varlist(self):
        kind, val, pos = self.toks.next()
        if val == "(":
            out = []
            while True:
                kind, val, pos = self.toks.next()
                idx = _var_index(val) if kind == "name" else None
                if idx is None:
                    raise FormulaParseError(
                        f"expected a variable, found {val!r}", pos)
                out.append(idx - 1)
                kind, val, pos = self.toks.next()
                if val == ")":
                    return out
                if val != ",":
                    raise FormulaParseError(
                        f"expected ',' or ')', found {val!r}", pos)
        idx = _var_index(val) if kind == "name" else None
        if idx is None:
            raise FormulaParseError(f"expected a variable, found {val!r}", pos)
        return [idx - 1]


def parse_formula(src: str, ring, side=LEFT) -> PpFormula:
    """Parse surface syntax into a canonical PpFormula."""
    return _Parser(src, ring, side).parse()


def formula_to_text(phi: PpFormula) -> str:
    """Canonical text; parsing it back yields an equal formula."""
    ring = phi.ring
    name = ring.element_name
    from .formulas import as_left
    view = as_left(phi)
    m, k, n = view.eq_count, view.witness_arity, view.arity
    a, b = view.a, view.b
    if k == 0 and n == 1 and b.is_zero():
        return "x = x"
    if k == 0 and m == 1 and n == 1:
        s = b.entries[0][0]
        return "x = 0" if s == ring.one else f"{name(s)} x = 0"
    if k == 1 and m == 1 and n == 1:
        r, s = a.entries[0][0], b.entries[0][0]
        if s == ring.one:
            return f"{name(r)}|x"
        return f"{name(r)}|{name(s)} x"
    a_txt = "[" + ";".join(",".join(name(e) for e in row)
                           for row in a.entries) + "]" if k else "[]"
    b_txt = "[" + ";".join(",".join(name(e) for e in row)
                           for row in b.entries) + "]"
    if n == 1:
        vars_txt = "x"
    else:
        vars_txt = "(" + ",".join(f"x{i+1}" for i in range(n)) + ")"
    return f"{a_txt}|{b_txt}{vars_txt}"
