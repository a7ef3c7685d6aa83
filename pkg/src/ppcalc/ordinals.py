"""Ordinals below omega^2, plus infinity.

Values are Finite(b), Omega(a, b) meaning omega*a + b with a >= 1, and
Infinity.  This is exactly the range of heights that chain-replication
forests can produce, with room below omega^2 for sums of such.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .errors import ForestFormatError


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    omega_coeff: int  # a in omega*a + b
    finite_part: int  # b
    infinite: bool = False

    def __post_init__(self):
        if self.omega_coeff < 0 or self.finite_part < 0:
            raise ForestFormatError("ordinal parts must be nonnegative")

    @staticmethod
    def finite(b):
        return Ordinal(0, b)

    @staticmethod
    def omega(a=1, b=0):
        if a < 1:
            raise ForestFormatError("omega coefficient must be at least 1")
        return Ordinal(a, b)

    @staticmethod
    def infinity():
        return Ordinal(0, 0, True)

    def _key(self):
        if self.infinite:
            return (1, 0, 0)
        return (0, self.omega_coeff, self.finite_part)

    def __eq__(self, other):
        return self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def successor(self):
        if self.infinite:
            return self
        return Ordinal(self.omega_coeff, self.finite_part + 1)

    def is_finite(self):
        return not self.infinite and self.omega_coeff == 0

    def __str__(self):
        if self.infinite:
            return "inf"
        if self.omega_coeff == 0:
            return str(self.finite_part)
        w = "w" if self.omega_coeff == 1 else f"w*{self.omega_coeff}"
        return w if self.finite_part == 0 else f"{w}+{self.finite_part}"


def sup_closure(values, has_all_finite=False):
    """Supremum of finitely many ordinals, plus optionally sup{n : n < w}.

    `has_all_finite` adds the limit of all finite ordinals (= omega) to
    the family, which is how an all-finite-lengths chain marker enters a
    height computation.
    """
    best = Ordinal.finite(0)
    for v in values:
        if v > best:
            best = v
    if has_all_finite and best < Ordinal.omega():
        best = Ordinal.omega()
    return best
