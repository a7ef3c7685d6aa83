"""Ulm submodules computed from high formulas.

`ulm_div` is the divisibility approximation: the intersection of rM over
all r that are not right zero divisors.  `ulm_bounded` intersects the
values of every high formula up to a size bound; it always contains the
true first Ulm submodule and reports whether it stabilized between the
last two bounds.  Neither claims exactness beyond what it computed.
"""

from __future__ import annotations

from .classify import classify
from .errors import ArityError, UnsupportedRingError
from .formulas import enumerate_unary_formulas, gamma_superscript
from .modules import (ExplicitModule, ExplicitSubgroup, FgAbelianModule,
                      explicit_subgroup, make_lattice_subgroup)
from .rings import regular_sets
from .semantics import evaluate

_high_cache: dict = {}


def ulm_div(module):
    """Intersection of rM over the non-right-zero-divisors r.

    Over Z this is the divisible part, which vanishes for every finitely
    generated group, so the zero subgroup comes straight from the
    canonical form.
    """
    if isinstance(module, FgAbelianModule):
        return make_lattice_subgroup(module, 1, [])
    if not isinstance(module, ExplicitModule):
        raise UnsupportedRingError("unsupported module kind")
    ring = module.ring
    s_left = regular_sets(ring).s_left
    current = set((a,) for a in module.elements())
    for r in s_left:
        image = {(module.act(r, a),) for a in module.elements()}
        current &= image
    return explicit_subgroup(module, current, 1)


def high_formulas(ring, bound):
    """All size-bounded unary formulas classified high, cached per ring."""
    key = (id(ring), bound)
    found = _high_cache.get(key)
    if found is None:
        found = tuple(phi for phi in enumerate_unary_formulas(ring, bound)
                      if classify(phi).high)
        _high_cache[key] = found
    return found


def ulm_bounded(module: ExplicitModule, bound: int):
    """Intersection of phi(M) over all high phi of size <= bound.

    Returns (subgroup, stabilized) where stabilized reports whether the
    bounds bound-1 and bound produce the same value.  The result always
    contains the first Ulm submodule; it is not claimed to equal it.
    """
    if not isinstance(module, ExplicitModule):
        raise UnsupportedRingError(
            "the bounded Ulm approximation runs on finite modules")

    def value(b):
        current = set((a,) for a in module.elements())
        for phi in high_formulas(module.ring, b):
            current &= set(evaluate(phi, module).elements)
        return current

    final = value(bound)
    previous = value(bound - 1) if bound > 1 else set((a,) for a in module.elements())
    return explicit_subgroup(module, final, 1), final == previous


def check_gamma_high(gamma, delta) -> bool:
    """Is delta^gamma high, for high inputs?  (It always should be.)"""
    if gamma.arity != 1 or delta.arity != 1:
        raise ArityError("the check applies to unary formulas")
    if not classify(gamma).high or not classify(delta).high:
        raise ArityError("both inputs must be classified high")
    return classify(gamma_superscript(delta, gamma)).high
