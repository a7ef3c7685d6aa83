"""Simply presented p-groups as height forests.

A forest node is one generator; the relations are p*(node) = parent and
p*(root) = 0.  Two markers describe infinite parts finitely:

* rep_chains: extra descending chains hanging below the node, either a
  list of finite lengths or "all" for one chain of every finite length
  (this is what pushes the node's height up to omega);
* divisible: an infinite ascending chain above the node, making the
  node's height infinite.

Heights are computed bottom-up; the node sets N_tau (height >= omega*tau)
generate the transfinite powers of the group in the classical simply
presented semantics, which is what the report returns ("tree semantics").
Truncating the markers gives finite groups that serve as oracles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ForestFormatError
from .ordinals import Ordinal, sup_closure


@dataclass
class ForestNode:
    name: str
    children: list = field(default_factory=list)
    rep_chains: object = None  # None | "all" | list of ints >= 1
    divisible: bool = False

    def validate(self, seen):
        if self.name in seen:
            raise ForestFormatError(f"duplicate node name {self.name!r}")
        seen.add(self.name)
        if self.rep_chains not in (None, "all"):
            if not isinstance(self.rep_chains, (list, tuple)) or \
                    any(not isinstance(x, int) or x < 1 for x in self.rep_chains):
                raise ForestFormatError(
                    f"rep_chains of {self.name!r} must be \"all\" or lengths >= 1")
        for child in self.children:
            child.validate(seen)


@dataclass
class HeightForest:
    p: int
    roots: list

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, self.p)):
            raise ForestFormatError(f"{self.p} is not a prime")
        seen = set()
        for root in self.roots:
            root.validate(seen)

    def nodes(self):
        out = []

        def walk(node):
            out.append(node)
            for c in node.children:
                walk(c)
        for root in self.roots:
            walk(root)
        return out

    def heights(self) -> dict:
        """Ordinal height of every named node, bottom-up."""
        result = {}

        def height(node) -> Ordinal:
            values = [height(c).successor() for c in node.children]
            if node.rep_chains not in (None, "all"):
                values.extend(Ordinal.finite(l) for l in node.rep_chains)
            if node.divisible:
                values.append(Ordinal.infinity())
            h = sup_closure(values, has_all_finite=node.rep_chains == "all")
            result[node.name] = h
            return h

        for root in self.roots:
            height(root)
        return result


@dataclass
class UlmReport:
    heights: dict
    node_sets: list  # N_0, N_1, ... as sorted name tuples
    ulm_length: int
    first_ulm_generators: tuple
    semantics: str = "tree"

    def to_dict(self):
        return {
            "heights": {k: str(v) for k, v in sorted(self.heights.items())},
            "node_sets": [list(s) for s in self.node_sets],
            "ulm_length": self.ulm_length,
            "first_ulm_generators": list(self.first_ulm_generators),
            "semantics": self.semantics,
        }


def ulm_sequence(forest: HeightForest) -> UlmReport:
    """Node sets N_tau = {height >= omega*tau} and the stabilization point.

    The length is the least tau with N_tau = N_{tau+1}; the subforest on
    N_tau generates the tau-th transfinite power of the group.  Chain
    markers contribute virtual finite-height generators that live at
    level 0 only, so level 0 compares unequal to level 1 whenever any
    marker is present.
    """
    hs = forest.heights()
    has_chain_virtuals = any(n.rep_chains is not None for n in forest.nodes())
    levels = []  # (sorted node names, include-virtual-chain flag)
    tau = 0
    while True:
        threshold = Ordinal.finite(0) if tau == 0 else Ordinal.omega(tau)
        names = tuple(sorted(n for n, h in hs.items() if h >= threshold))
        levels.append((names, has_chain_virtuals if tau == 0 else False))
        if tau > 0 and levels[tau] == levels[tau - 1]:
            break
        if not names:
            levels.append((names, False))
            break
        tau += 1
    length = 0
    while length + 1 < len(levels) and levels[length] != levels[length + 1]:
        length += 1
    node_sets = [lv[0] for lv in levels[:length + 2]]
    first = node_sets[1] if len(node_sets) > 1 else node_sets[0]
    return UlmReport(hs, node_sets, length, first)


def disjoint_union(f1: HeightForest, f2: HeightForest,
                   rename=True) -> HeightForest:
    if f1.p != f2.p:
        raise ForestFormatError("forests live at different primes")

    def copy(node, prefix):
        return ForestNode(prefix + node.name,
                          [copy(c, prefix) for c in node.children],
                          node.rep_chains if node.rep_chains in (None, "all")
                          else list(node.rep_chains),
                          node.divisible)

    p1, p2 = ("L.", "R.") if rename else ("", "")
    return HeightForest(f1.p, [copy(r, p1) for r in f1.roots]
                        + [copy(r, p2) for r in f2.roots])


# ---------------------------------------------------------------------------
# truncation oracle: finite forests are finite abelian p-groups

def truncate(forest: HeightForest, depth: int) -> HeightForest:
    """Replace markers by finite material: chains of length <= depth.

    all-finite-lengths markers become explicit chains of lengths
    1..depth, divisible markers become one ascending chain of length
    depth.  The result is a plain finite forest.
    """

    def expand(node, counter):
        children = [expand(c, counter) for c in node.children]
        new = ForestNode(node.name, children)
        lengths = []
        if node.rep_chains == "all":
            lengths = list(range(1, depth + 1))
        elif node.rep_chains:
            lengths = list(node.rep_chains)
        for length in lengths:
            counter[0] += 1
            chain = None
            for i in range(length, 0, -1):
                chain = ForestNode(f"{node.name}.c{counter[0]}.{i}",
                                   [chain] if chain else [])
            new.children.append(chain)
        if node.divisible:
            counter[0] += 1
            # ascending chain: node = p * d1, d_i = p * d_{i+1}; in tree
            # form the ascending generators become a chain whose deepest
            # node has the original node as its only child
            top = new
            for i in range(1, depth + 1):
                top = ForestNode(f"{node.name}.d{counter[0]}.{i}", [top])
            return top
        return new

    counter = [0]
    return HeightForest(forest.p, [expand(r, counter) for r in forest.roots])


def forest_presentation(forest: HeightForest):
    """Integer presentation of a finite (marker-free) forest group.

    Returns (names, relation rows) for Z^n / <p*node - parent>.
    """
    names = []
    index = {}
    parents = {}

    def walk(node, parent):
        if node.rep_chains or node.divisible:
            raise ForestFormatError("presentation needs a truncated forest")
        index[node.name] = len(names)
        names.append(node.name)
        parents[node.name] = parent
        for c in node.children:
            walk(c, node.name)

    for root in forest.roots:
        walk(root, None)
    n = len(names)
    rows = []
    for name in names:
        row = [0] * n
        row[index[name]] = forest.p
        parent = parents[name]
        if parent is not None:
            row[index[parent]] = -1
        rows.append(row)
    return names, rows


# ---------------------------------------------------------------------------
# named examples and random forests

def chain_forest(p, length, name="g") -> HeightForest:
    """The cyclic group Z/p^length as a single chain."""
    node = None
    for i in range(length, 0, -1):
        node = ForestNode(f"{name}{i}", [node] if node else [])
    return HeightForest(p, [node])


def h_omega_plus_one(p=2) -> HeightForest:
    """Root with one chain of every finite length: height(root) = omega."""
    return HeightForest(p, [ForestNode("a", rep_chains="all")])


def pruefer_forest(p=2) -> HeightForest:
    return HeightForest(p, [ForestNode("a", divisible=True)])


def random_forest(p, rng, max_depth=3, max_children=2) -> HeightForest:
    counter = [0]

    def node(depth):
        counter[0] += 1
        nm = f"n{counter[0]}"
        children = []
        if depth < max_depth:
            for _ in range(rng.randint(0, max_children)):
                children.append(node(depth + 1))
        rep = None
        roll = rng.random()
        if roll < 0.15:
            rep = "all"
        elif roll < 0.3:
            rep = [rng.randint(1, 4) for _ in range(rng.randint(1, 2))]
        divisible = rng.random() < 0.1
        return ForestNode(nm, children, rep, divisible)

    return HeightForest(p, [node(0) for _ in range(rng.randint(1, 2))])


# ---------------------------------------------------------------------------
# file format

def forest_from_dict(data) -> HeightForest:
    def node(d):
        if "name" not in d:
            raise ForestFormatError("every node needs a name")
        return ForestNode(d["name"],
                          [node(c) for c in d.get("children", [])],
                          d.get("rep_chains"),
                          bool(d.get("divisible", False)))

    try:
        p = data["p"]
        roots = [node(r) for r in data["roots"]]
    except (KeyError, TypeError) as exc:
        raise ForestFormatError(f"missing forest field: {exc}")
    return HeightForest(p, roots)


def forest_to_dict(forest: HeightForest) -> dict:
    def node(n):
        out = {"name": n.name}
        if n.children:
            out["children"] = [node(c) for c in n.children]
        if n.rep_chains is not None:
            out["rep_chains"] = n.rep_chains if n.rep_chains == "all" \
                else list(n.rep_chains)
        if n.divisible:
            out["divisible"] = True
        return out

    return {"p": forest.p, "roots": [node(r) for r in forest.roots]}


def load_forest_file(path) -> HeightForest:
    with open(path) as fh:
        return forest_from_dict(json.load(fh))
