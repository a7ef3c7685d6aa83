"""Bundled rings, modules, and forests, and name resolution for the CLI.

Ring names: "Z", "Z/<n>", "T8" (upper triangular 2x2 matrices over Z/2),
"F4" (the four-element field), or a path to a ring file.  The corpus
data directory ships with the package; the PPCALC_CORPUS environment
variable overrides it.
"""

from __future__ import annotations

import itertools
import os
import random
from importlib import resources

from .errors import RingFormatError
from .forest import load_forest_file
from .modules import load_module_file, module_from_shorthand
from .rings import ZZ, ModularRing, TableRing, load_ring_file

_ring_cache: dict = {}


def corpus_dir():
    override = os.environ.get("PPCALC_CORPUS")
    if override:
        return override
    return str(resources.files("ppcalc") / "corpus")


def corpus_path(name):
    return os.path.join(corpus_dir(), name)


def triangular_ring_z2() -> TableRing:
    """The eight upper triangular 2x2 matrices over Z/2.

    Element (a, b, c) stands for [[a, b], [0, c]] and is named m<a><b><c>.
    """
    elems = list(itertools.product((0, 1), repeat=3))
    index = {e: i for i, e in enumerate(elems)}
    names = [f"m{a}{b}{c}" for a, b, c in elems]

    def add(x, y):
        return tuple((p + q) % 2 for p, q in zip(x, y))

    def mul(x, y):
        a, b, c = x
        d, e, f = y
        return ((a * d) % 2, (a * e + b * f) % 2, (c * f) % 2)

    add_t = [[index[add(x, y)] for y in elems] for x in elems]
    mul_t = [[index[mul(x, y)] for y in elems] for x in elems]
    return TableRing(names, add_t, mul_t, index[(0, 0, 0)],
                     index[(1, 0, 1)], ring_name="T8")


def field_f4() -> TableRing:
    """GF(4) with elements 0, 1, w, v where v = w + 1 = w^2."""
    names = ["o", "i", "w", "v"]
    add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]]
    return TableRing(names, add, mul, 0, 1, ring_name="F4")


def scrambled_modular_ring(n, seed) -> TableRing:
    """Z/n with randomly permuted element labels, rebuilt from tables.

    The permutation hides the arithmetic structure, so loading this ring
    exercises the full axiom verification on a nontrivial presentation.
    """
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    names = [f"e{i}" for i in range(n)]
    add = [[perm[(inv[a] + inv[b]) % n] for b in range(n)] for a in range(n)]
    mul = [[perm[(inv[a] * inv[b]) % n] for b in range(n)] for a in range(n)]
    return TableRing(names, add, mul, perm[0], perm[1 % n],
                     ring_name=f"scrambled Z/{n} (seed {seed})")


def resolve_ring(name: str):
    """Ring from a CLI name: Z, Z/<n>, T8, F4, or a ring file path."""
    cached = _ring_cache.get(name)
    if cached is not None:
        return cached
    if name == "Z":
        ring = ZZ
    elif name.startswith("Z/"):
        try:
            ring = ModularRing(int(name[2:]))
        except ValueError:
            raise RingFormatError(f"cannot read modulus in {name!r}")
    elif name == "T8":
        ring = triangular_ring_z2()
    elif name == "F4":
        ring = field_f4()
    elif os.path.exists(name):
        ring = load_ring_file(name)
    elif os.path.exists(corpus_path(name)):
        ring = load_ring_file(corpus_path(name))
    else:
        raise RingFormatError(f"unknown ring {name!r}")
    _ring_cache[name] = ring
    return ring


def resolve_module(spec: str, ring, side="left"):
    """Module from a CLI argument: a file path or Z/a + Z/b shorthand."""
    if os.path.exists(spec):
        return load_module_file(spec, ring)
    candidate = corpus_path(spec)
    if os.path.exists(candidate):
        return load_module_file(candidate, ring)
    return module_from_shorthand(spec, ring, side=side)


def resolve_forest(spec: str):
    if os.path.exists(spec):
        return load_forest_file(spec)
    return load_forest_file(corpus_path(spec))


#: rings exercised by the self-test and the acceptance suite
CORPUS_RING_NAMES = ("Z", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8",
                     "Z/9", "Z/12", "T8")


def corpus_rings(include_scrambled_seed=None):
    rings = [resolve_ring(nm) for nm in CORPUS_RING_NAMES]
    if include_scrambled_seed is not None:
        rings.append(scrambled_modular_ring(6, include_scrambled_seed))
    return rings
