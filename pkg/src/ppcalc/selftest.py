"""Property suites over the bundled corpus.

Each suite draws its instances from a seeded generator, so a fixed seed
gives byte-identical reports.  Suite sizes are scaled by a single factor
so the CLI can run a quick pass while the acceptance tests run the full
counts.  Failures never raise; they are returned as report entries.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .classify import classify, proposition_criteria, rd_table
from .corpus import corpus_rings, resolve_ring
from .errors import CapExceeded, PpcalcError
from .formulas import (annihilation, divisibility, dual, enumerate_unary_formulas,
                       gamma_subscript, gamma_superscript, inverse, join, meet,
                       multiple, random_formula, true_formula)
from .forest import (disjoint_union, forest_presentation, h_omega_plus_one,
                     random_forest, truncate, ulm_sequence)
from .lattice import bounded_by_kernel, equiv, implies, presta_solve
from .modules import (cyclic_product_module, explicit_subgroup,
                      regular_module, submodule_as_module)
from .parser import formula_to_text, parse_formula
from .rings import (ModularRing, RingMatrix, ZZ, left_annihilator,
                    regular_sets)
from .semantics import evaluate, free_realization, holds_at, is_divisible
from .ulm import high_formulas, ulm_bounded, ulm_div
from . import intlin


@dataclass
class SuiteResult:
    name: str
    checks: int
    failures: list

    @property
    def ok(self):
        return not self.failures

    def line(self):
        if self.ok:
            return f"PASS {self.name} checks={self.checks}"
        first = self.failures[0]
        return (f"FAIL {self.name} checks={self.checks} "
                f"failures={len(self.failures)} first={first}")


def _finite(rings):
    return [r for r in rings if r.is_finite]


def _sample_formulas(ring, rng, count):
    return [random_formula(ring, rng) for _ in range(count)]


# ---------------------------------------------------------------------------
# suites

def suite_annihilators(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        for _ in range(max(2, n // 20)):
            m, c = rng.randint(1, 3), rng.randint(1, 3)
            mat = RingMatrix.from_rows(
                ring, [[ring.random_element(rng) for _ in range(c)]
                       for _ in range(m)])
            ann = left_annihilator(mat)
            members = set(ann.vectors)
            zero = (ring.zero,) * c
            for v in members:
                checks += 1
                prod = tuple(_row_times(ring, v, mat, j) for j in range(c))
                if prod != zero:
                    failures.append(f"{ring}: member {v} fails")
            for _ in range(100):
                v = tuple(ring.random_element(rng) for _ in range(m))
                checks += 1
                prod = tuple(_row_times(ring, v, mat, j) for j in range(c))
                if (prod == zero) != (v in members):
                    failures.append(f"{ring}: scan mismatch at {v}")
        ident = left_annihilator(RingMatrix.identity(ring, 2))
        zero_m = left_annihilator(RingMatrix.zero_matrix(ring, 2, 2))
        checks += 2
        if not ident.is_zero():
            failures.append(f"{ring}: ann(identity) not zero")
        if len(zero_m) != ring.size ** 2:
            failures.append(f"{ring}: ann(0) not everything")
        rs = regular_sets(ring)
        for r in ring.elements():
            checks += 1
            injective = len({ring.mul(t, r) for t in ring.elements()}) == ring.size
            if injective != (r in rs.s_left):
                failures.append(f"{ring}: S_left mismatch at {r}")
    return SuiteResult("ring-core/annihilators", checks, failures)


def _row_times(ring, vec, mat, j):
    acc = ring.zero
    for e, row in zip(vec, mat.entries):
        acc = ring.add(acc, ring.mul(e, row[j]))
    return acc


def suite_parse_roundtrip(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n // 4):
            checks += 1
            text = formula_to_text(phi)
            try:
                back = parse_formula(text, ring)
            except PpcalcError as exc:
                failures.append(f"{ring}: {text!r} reparse error {exc}")
                continue
            if back.key() != phi.key():
                failures.append(f"{ring}: roundtrip changed {text!r}")
    return SuiteResult("pp-syntax/print-parse", checks, failures)


def suite_dual_involution(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n):
            checks += 1
            if not equiv(dual(dual(phi)), phi):
                failures.append(f"{ring}: D^2 != id at {phi}")
    return SuiteResult("pp-syntax/dual-involution", checks, failures)


def suite_dual_antihom(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for _ in range(n // 2):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            checks += 1
            if not equiv(dual(meet(phi, psi)), join(dual(phi), dual(psi))):
                failures.append(f"{ring}: D(meet) != join(D) at {phi}, {psi}")
    return SuiteResult("pp-syntax/dual-antihom", checks, failures)


def suite_dualmult(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        for _ in range(n // 2):
            psi = random_formula(ring, rng)
            s = ring.random_element(rng)
            checks += 1
            if not equiv(dual(multiple(s, psi)), inverse(s, dual(psi))):
                failures.append(f"{ring}: dual-multiple law at s={s}, {psi}")
    return SuiteResult("pp-syntax/dual-multiple", checks, failures)


def suite_gamma_laws(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        for _ in range(max(2, n // 10)):
            phi = random_formula(ring, rng, max_dim=1)
            chi = random_formula(ring, rng, max_dim=1)
            gamma = random_formula(ring, rng, max_dim=1)
            checks += 2
            lhs = meet(gamma_subscript(phi, gamma), gamma_subscript(chi, gamma))
            rhs = gamma_subscript(meet(phi, chi), gamma)
            if not equiv(lhs, rhs):
                failures.append(f"{ring}: subscript meet law at {phi},{chi},{gamma}")
            lhs = meet(gamma_superscript(phi, gamma), gamma_superscript(chi, gamma))
            rhs = gamma_superscript(meet(phi, chi), gamma)
            if not equiv(lhs, rhs):
                failures.append(f"{ring}: superscript meet law at {phi},{chi},{gamma}")
            # quantifier-free formulas: superscript equals subscript
            qf = annihilation(ring, ring.random_element(rng))
            checks += 1
            if not equiv(gamma_superscript(qf, gamma), gamma_subscript(qf, gamma)):
                failures.append(f"{ring}: qf superscript law at {gamma}")
    return SuiteResult("pp-syntax/gamma-laws", checks, failures)


def _test_modules(ring, rng, count=2):
    """Small explicit test modules over a finite ring."""
    out = [regular_module(ring)]
    if isinstance(ring, ModularRing):
        divisors = [d for d in range(2, ring.n + 1) if ring.n % d == 0]
        for _ in range(count):
            pick = [rng.choice(divisors) for _ in range(rng.randint(1, 2))]
            out.append(cyclic_product_module(ring, pick))
    return out


def suite_lattice_ops_semantics(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        mods = _test_modules(ring, rng)
        for _ in range(max(2, n // 10)):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            for mod in mods:
                checks += 2
                v_phi = set(evaluate(phi, mod).elements)
                v_psi = set(evaluate(psi, mod).elements)
                v_meet = set(evaluate(meet(phi, psi), mod).elements)
                if v_meet != v_phi & v_psi:
                    failures.append(f"{ring}: meet != intersection")
                v_join = set(evaluate(join(phi, psi), mod).elements)
                expected = _subgroup_sum(mod, v_phi, v_psi)
                if v_join != expected:
                    failures.append(f"{ring}: join != sum")
            r = ring.random_element(rng)
            for mod in mods[:1]:
                checks += 2
                v_phi = [e[0] for e in evaluate(phi, mod).elements]
                v_mult = {e[0] for e in evaluate(multiple(r, phi), mod).elements}
                if v_mult != {mod.act(r, a) for a in v_phi}:
                    failures.append(f"{ring}: multiple evaluation at r={r}")
                v_inv = {e[0] for e in evaluate(inverse(r, phi), mod).elements}
                if v_inv != {a for a in mod.elements()
                             if mod.act(r, a) in set(v_phi)}:
                    failures.append(f"{ring}: inverse evaluation at r={r}")
    return SuiteResult("pp-semantics/lattice-ops", checks, failures)


def _subgroup_sum(mod, s1, s2):
    return {tuple(mod.add(a, b) for a, b in zip(x, y))
            for x in s1 for y in s2}


def suite_monotone_homs(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        if not isinstance(ring, ModularRing):
            continue
        divisors = [d for d in range(2, ring.n + 1) if ring.n % d == 0]
        for _ in range(max(2, n // 10)):
            d1 = [rng.choice(divisors) for _ in range(rng.randint(1, 2))]
            d2 = [rng.choice(divisors) for _ in range(rng.randint(1, 2))]
            m1 = cyclic_product_module(ring, d1)
            m2 = cyclic_product_module(ring, d2)
            # a hom is a matrix h[j][i] with d1[i]*h[j][i] = 0 mod d2[j]
            h = [[(d2[j] // _gcd(d2[j], d1[i])) *
                  rng.randrange(_gcd(d2[j], d1[i]))
                  for i in range(len(d1))] for j in range(len(d2))]

            def apply(vec_name):
                coords = _coords_of(m1, vec_name)
                return tuple(sum(h[j][i] * coords[i] for i in range(len(d1)))
                             % d2[j] for j in range(len(d2)))

            phi = random_formula(ring, rng)
            v1 = evaluate(phi, m1)
            v2 = {_coords_of(m2, e[0]) for e in evaluate(phi, m2).elements}
            checks += 1
            for e in v1.elements:
                if apply(e[0]) not in v2:
                    failures.append(f"{ring}: hom image escapes at {phi}")
                    break
    return SuiteResult("pp-semantics/hom-monotone", checks, failures)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _coords_of(mod, elt):
    # cyclic_product_module names elements "(a,b)"
    return tuple(int(x) for x in mod.names[elt].strip("()").split(","))


def suite_rinverse_chain(rings, rng, n):
    failures = []
    checks = 0
    finite = [r for r in _finite(rings) if isinstance(r, ModularRing)]
    produced = 0
    attempts = 0
    while produced < n and finite and attempts < 40 * n:
        attempts += 1
        ring = finite[attempts % len(finite)]
        mods = _test_modules(ring, rng, count=1)
        mod = mods[rng.randrange(len(mods))]
        phi = random_formula(ring, rng)
        r = ring.random_element(rng)
        value = [e[0] for e in evaluate(phi, mod).elements]
        if any(mod.act(r, a) != mod.zero for a in value):
            continue
        produced += 1
        checks += 1
        chain = [set(value)]
        current = phi
        stable_at = None
        for step in range(1, 8):
            current = inverse(r, current)
            nxt = {e[0] for e in evaluate(current, mod).elements}
            if not chain[-1] <= nxt:
                failures.append(f"{ring}: chain not ascending at {phi}, r={r}")
                break
            if nxt == chain[-1]:
                stable_at = step - 1
                break
            chain.append(nxt)
        if stable_at is not None:
            power = {mod.zero}
            image = set(mod.elements())
            for _ in range(stable_at + 1):
                image = {mod.act(r, a) for a in image}
            if image & chain[-1] != {mod.zero}:
                failures.append(
                    f"{ring}: r^(n+1)M meets phi(M) at {phi}, r={r}")
    return SuiteResult("pp-semantics/r-inverse-chain", checks, failures)


def suite_free_realization(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        for _ in range(max(2, n // 10)):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            try:
                mod, point = free_realization(phi)
            except CapExceeded:
                continue
            checks += 2
            if not holds_at(phi, mod, point):
                failures.append(f"{ring}: phi fails at its own realization {phi}")
            if holds_at(psi, mod, point) != implies(phi, psi):
                failures.append(f"{ring}: realization test vs implies at {phi},{psi}")
    return SuiteResult("pp-semantics/free-realization", checks, failures)


def suite_oracle_agreement(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        count = n if ring.is_finite else max(10, (2 * n) // 5)
        for _ in range(count):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            checks += 1
            via_real = implies(phi, psi)
            via_presta, _ = presta_solve(phi, psi)
            if via_real != via_presta:
                failures.append(f"{ring}: implies={via_real} presta={via_presta} "
                                f"at {phi} vs {psi}")
    return SuiteResult("pp-lattice/oracle-agreement", checks, failures)


def suite_order_laws(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for _ in range(n // 4):
            phi = random_formula(ring, rng)
            psi = random_formula(ring, rng)
            chi = random_formula(ring, rng)
            checks += 2
            if not implies(phi, phi):
                failures.append(f"{ring}: reflexivity fails at {phi}")
            if implies(phi, psi) and implies(psi, chi) and not implies(phi, chi):
                failures.append(f"{ring}: transitivity fails")
            checks += 1
            if implies(phi, psi) != implies(dual(psi), dual(phi)):
                failures.append(f"{ring}: duality not order reversing")
    return SuiteResult("pp-lattice/order-laws", checks, failures)


def suite_semantic_soundness(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        mods = _test_modules(ring, rng)
        for _ in range(max(2, n // 10)):
            phi, psi = random_formula(ring, rng), random_formula(ring, rng)
            if implies(phi, psi):
                for mod in mods:
                    checks += 1
                    v1 = set(evaluate(phi, mod).elements)
                    v2 = set(evaluate(psi, mod).elements)
                    if not v1 <= v2:
                        failures.append(f"{ring}: containment fails at {phi},{psi}")
            else:
                checks += 1
                try:
                    mod, point = free_realization(phi)
                except CapExceeded:
                    continue
                if holds_at(psi, mod, point):
                    failures.append(f"{ring}: no separation at {phi},{psi}")
    return SuiteResult("pp-lattice/semantic-soundness", checks, failures)


def suite_ziegler_crosscheck(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        for phi in enumerate_unary_formulas(ring, 4):
            checks += 1
            bounded, _t, r = bounded_by_kernel(phi)
            cls = classify(phi)
            if bounded != cls.bounded:
                failures.append(f"{ring}: kernel vs classifier at {phi}")
            if bounded and not implies(phi, annihilation(ring, r)):
                failures.append(f"{ring}: kernel witness invalid at {phi}")
    return SuiteResult("pp-lattice/kernel-criterion", checks, failures)


def suite_dichotomies(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n):
            checks += 1
            try:
                cls = classify(phi)
            except AssertionError as exc:
                failures.append(f"{ring}: {exc}")
                continue
            if cls.high == cls.bounded or cls.low == cls.cobounded:
                failures.append(f"{ring}: dichotomy violated at {phi}")
    return SuiteResult("classifier/dichotomies", checks, failures)


def suite_duality_lemma(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n):
            checks += 1
            cls, cdual = classify(phi), classify(dual(phi))
            if cls.high != cdual.low or cls.bounded != cdual.cobounded:
                failures.append(f"{ring}: duality lemma fails at {phi}")
    return SuiteResult("classifier/duality-lemma", checks, failures)


def suite_witness_validity(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n // 2):
            cls = classify(phi)
            if cls.bounded:
                checks += 1
                if not implies(phi, annihilation(ring, cls.bound_witness)):
                    failures.append(f"{ring}: bound witness invalid at {phi}")
            if cls.cobounded:
                checks += 1
                if not implies(divisibility(ring, cls.cobound_witness), phi):
                    failures.append(f"{ring}: cobound witness invalid at {phi}")
    return SuiteResult("classifier/witness-validity", checks, failures)


def suite_criteria_agreement(rings, rng, n):
    failures = []
    checks = 0
    for ring in rings:
        for phi in _sample_formulas(ring, rng, n // 2):
            checks += 1
            cls = classify(phi)
            crit = proposition_criteria(phi)
            if (cls.bounded, cls.high, cls.low, cls.cobounded) != \
                    (crit.bounded, crit.high, crit.low, crit.cobounded):
                failures.append(f"{ring}: criteria disagree at {phi}")
    return SuiteResult("classifier/ring-criteria", checks, failures)


def suite_domain_regions(rings, rng, n):
    failures = []
    checks = 0
    for phi in _sample_formulas(ZZ, rng, n):
        checks += 1
        cls = classify(phi)
        if not (cls.high or cls.low):
            failures.append(f"Z: formula neither high nor low: {phi}")
        if cls.region == "E":
            failures.append(f"Z: E-region formula {phi}")
    for name in ("Z/4", "Z/6"):
        ring = resolve_ring(name)
        checks += 1
        entries, _ = rd_table(ring)
        if not any(e.classification.region == "E" for e in entries):
            failures.append(f"{name}: no E-region basic RD formula found")
        if not all(e.agrees for e in entries):
            failures.append(f"{name}: rd table criteria mismatch")
    for ring in rings:
        for phi in _sample_formulas(ring, rng, max(2, n // 10)):
            checks += 1
            if classify(phi).region == "W*":
                failures.append(f"{ring}: W* fired on corpus ring at {phi}")
    return SuiteResult("classifier/domain-regions", checks, failures)


def suite_essential_cobounded(rings, rng, n):
    from .classify import is_essential
    failures = []
    checks = 0
    for ring in _finite(rings):
        for phi in _sample_formulas(ring, rng, max(2, n // 5)):
            if is_essential(phi):
                checks += 1
                if not classify(phi).cobounded:
                    failures.append(f"{ring}: essential but not cobounded {phi}")
    return SuiteResult("classifier/essential-cobounded", checks, failures)


def suite_abspure_degeneration(rings, rng, n):
    failures = []
    checks = 0
    for name in ("Z/4", "Z/6"):
        ring = resolve_ring(name)
        top = true_formula(ring)
        for phi in enumerate_unary_formulas(ring, 4):
            if classify(phi).high:
                checks += 1
                if not equiv(phi, top):
                    failures.append(f"{name}: high but not trivial {phi}")
    return SuiteResult("classifier/abspure-degeneration", checks, failures)


def suite_forest_direct_sum(rings, rng, n):
    failures = []
    checks = 0
    for _ in range(n):
        f1 = random_forest(2, rng)
        f2 = random_forest(2, rng)
        r1, r2, ru = ulm_sequence(f1), ulm_sequence(f2), \
            ulm_sequence(disjoint_union(f1, f2))
        checks += 1
        if ru.ulm_length != max(r1.ulm_length, r2.ulm_length):
            failures.append("forest direct sum length mismatch")
            continue
        for tau in range(len(ru.node_sets)):
            s1 = {f"L.{x}" for x in _level(r1, tau)}
            s2 = {f"R.{x}" for x in _level(r2, tau)}
            if set(ru.node_sets[tau]) != s1 | s2:
                failures.append(f"forest direct sum level {tau} mismatch")
                break
    return SuiteResult("ulm/forest-direct-sum", checks, failures)


def _level(report, tau):
    sets = report.node_sets
    return sets[tau] if tau < len(sets) else sets[-1]


def suite_truncation_oracle(rings, rng, n):
    failures = []
    checks = 0
    forest = h_omega_plus_one(2)
    for depth in (3, 5, 8):
        finite = truncate(forest, depth)
        names, rows = forest_presentation(finite)
        dim = len(names)
        root = [1 if nm == "a" else 0 for nm in names]
        for k in range(1, depth + 1):
            checks += 1
            lat = [[(2 ** k if i == j else 0) for i in range(dim)]
                   for j in range(dim)] + rows
            if not intlin.lat_member(intlin.hnf(lat, dim), root):
                failures.append(f"truncation {depth}: root not in p^{k} G")
    return SuiteResult("ulm/truncation-oracle", checks, failures)


def suite_ulm_bounds(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        if not isinstance(ring, ModularRing):
            continue
        mods = _test_modules(ring, rng)
        for mod in mods:
            checks += 1
            bounded_sub, _stab = ulm_bounded(mod, 4)
            div_sub = ulm_div(mod)
            if not set(bounded_sub.elements) <= set(div_sub.elements):
                failures.append(f"{ring}: bounded Ulm escapes divisibility bound")
    return SuiteResult("ulm/divisibility-bound", checks, failures)


def suite_ulm_idempotent(rings, rng, n):
    failures = []
    checks = 0
    for ring in _finite(rings):
        if not isinstance(ring, ModularRing):
            continue
        for mod in _test_modules(ring, rng):
            checks += 1
            sub, stab = ulm_bounded(mod, 4)
            try:
                inner = submodule_as_module(sub)
            except PpcalcError:
                failures.append(f"{ring}: Ulm value not action-closed")
                continue
            again, _ = ulm_bounded(inner, 4)
            if len(again) != len(sub):
                failures.append(f"{ring}: bounded Ulm not idempotent")
    return SuiteResult("ulm/pure-injective-bound", checks, failures)


def suite_high_filter_z(rings, rng, n):
    failures = []
    checks = 0
    found = 0
    for phi in _sample_formulas(ZZ, rng, n):
        if not classify(phi).high:
            continue
        checks += 1
        found += 1
        witness = None
        sub = evaluate(phi, _z_module())
        g = abs(sub.basis[0][0]) if sub.basis else 0
        candidates = ([g] if 0 < g <= 1000 else []) + list(range(1, 51))
        for m in candidates:
            if implies(divisibility(ZZ, m), phi):
                witness = m
                break
        if witness is None:
            failures.append(f"Z: no divisibility generator under {phi}")
    return SuiteResult("ulm/high-filter-z", checks, failures)


def _z_module():
    from .modules import regular_fg_module
    return regular_fg_module()


def suite_gamma_high(rings, rng, n):
    from .ulm import check_gamma_high
    failures = []
    checks = 0
    for ring in _finite(rings):
        highs = [phi for phi in _sample_formulas(ring, rng, n)
                 if classify(phi).high]
        for i in range(0, len(highs) - 1, 2):
            checks += 1
            if not check_gamma_high(highs[i], highs[i + 1]):
                failures.append(f"{ring}: superscript of highs not high")
    return SuiteResult("ulm/gamma-high", checks, failures)


def suite_divisible_modules(rings, rng, n):
    failures = []
    checks = 0
    z4 = resolve_ring("Z/4")
    checks += 2
    ok, _ = is_divisible(regular_module(z4))
    if not ok:
        failures.append("Z/4 not divisible over itself")
    ok, witness = is_divisible(cyclic_product_module(z4, [2]))
    if ok or witness != (2, 1):
        failures.append(f"Z/2 over Z/4 divisibility witness wrong: {witness}")
    return SuiteResult("pp-semantics/divisible", checks, failures)


SUITES = (
    suite_annihilators,
    suite_parse_roundtrip,
    suite_dual_involution,
    suite_dual_antihom,
    suite_dualmult,
    suite_gamma_laws,
    suite_lattice_ops_semantics,
    suite_monotone_homs,
    suite_rinverse_chain,
    suite_free_realization,
    suite_oracle_agreement,
    suite_order_laws,
    suite_semantic_soundness,
    suite_ziegler_crosscheck,
    suite_dichotomies,
    suite_duality_lemma,
    suite_witness_validity,
    suite_criteria_agreement,
    suite_domain_regions,
    suite_essential_cobounded,
    suite_abspure_degeneration,
    suite_forest_direct_sum,
    suite_truncation_oracle,
    suite_ulm_bounds,
    suite_ulm_idempotent,
    suite_high_filter_z,
    suite_gamma_high,
    suite_divisible_modules,
)


def run_selftest(seed=0, size=40, suites=None):
    """Run every suite over the corpus; returns a list of SuiteResult.

    Deterministic for a fixed (seed, size): every suite gets its own
    generator derived from the master seed.
    """
    results = []
    names = {s.__name__ for s in SUITES}
    selected = SUITES if suites is None else [
        s for s in SUITES if s.__name__ in suites and s.__name__ in names]
    rings = corpus_rings(include_scrambled_seed=seed)
    for suite in selected:
        rng = random.Random((seed, suite.__name__).__str__())
        results.append(suite(rings, rng, size))
    return results


def report_text(results):
    lines = [r.line() for r in results]
    total = sum(r.checks for r in results)
    bad = [r for r in results if not r.ok]
    lines.append(f"{'FAIL' if bad else 'PASS'} total suites={len(results)} "
                 f"checks={total} failing={len(bad)}")
    return "\n".join(lines)
