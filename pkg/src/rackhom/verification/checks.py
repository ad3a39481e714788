"""The acceptance checks run by ``rackhom verify``."""

from __future__ import annotations

import random
from itertools import product
from typing import Literal

from sympy import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors as sympy_invariant_factors

from rackhom.algebra.families import make_dihedral, make_trivial
from rackhom.algebra.table import FiniteRack
from rackhom.free.elements import (
    FreeQuandleElement,
    as_group_word,
    extend_map,
    fq_canonicalize,
    fq_op,
    fr_inverse_op,
    fr_op,
    generator,
    random_element,
    reduced_words,
)
from rackhom.homology.boundaries import is_degenerate_subcomplex
from rackhom.homology.bundle import THEORIES, Theory, build_bundle
from rackhom.homology.cocycles import is_cocycle, two_cocycles
from rackhom.homology.coefficients import INTEGERS, CoefficientSpec
from rackhom.homology.compute import (
    cohomology,
    derivations,
    homology,
    quillen_cohomology,
    rack_cohomology,
    rack_homology,
)
from rackhom.linalg.complex import compose_check, homology_at, homology_dim_fp, homology_mod
from rackhom.linalg.groups import AbelianGroupPresentation
from rackhom.verification.base import CorpusEntry, SuiteContext

FREE_ALPHABET = ("a", "b", "c")
# Bijection of canonical free-quandle elements on two generators with conjugates.
FQ2_MAX_CONJUGATOR = 4
ORACLE_DEGREE = 3
FP_PRIMES = (2, 3, 5)
# Highest degree compared by the splitting and mod-p checks; the shift check
# compares D^n with H^{n+1} and stops one lower.
COMPARISON_DEGREE = 4
EVALUATION_SIZE_LIMIT = 6
DERIVATION_CHECK_SIZE = 5


def _theories(entry: CorpusEntry) -> list[Literal["rack", "quandle"]]:
    return ["rack", "quandle"] if entry.is_quandle else ["rack"]


def _complexes(entry: CorpusEntry) -> list[Theory]:
    return ["rack", "quandle", "degenerate"] if entry.is_quandle else ["rack"]


def _coefficients(moduli: list[int]) -> list[CoefficientSpec]:
    return [INTEGERS, *(CoefficientSpec(m) for m in moduli)]


class TrivialHomologyCheck:
    """HR_p of the trivial rack on h points is free of rank h^p."""

    name = "trivial-homology"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        top = min(COMPARISON_DEGREE, context.config.max_degree)
        for h in (1, 2, 3):
            groups = rack_homology(make_trivial(h), top)
            for p, group in enumerate(groups):
                if group != AbelianGroupPresentation(h**p):
                    failures.append(f"trivial({h}): HR_{p} = {group}, expected Z^{h**p}")
        return failures


class LowDegreeCheck:
    """HR₀ = Z, HR₁ = Z^orbits, |HR⁰(Z/m)| = m and |HR¹(Z/m)| = m^orbits."""

    name = "low-degree"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.entries:
            count = entry.orbits.orbit_count
            groups = rack_homology(entry.rack, 1, bundle=entry.bundle)
            if groups[0] != AbelianGroupPresentation(1):
                failures.append(f"{entry.label}: HR_0 = {groups[0]}")
            if groups[1] != AbelianGroupPresentation(count):
                failures.append(f"{entry.label}: HR_1 = {groups[1]}, expected Z^{count}")
            for m in context.config.orbit_moduli:
                co = rack_cohomology(entry.rack, 1, CoefficientSpec(m), bundle=entry.bundle)
                if co[0].order != m:
                    failures.append(f"{entry.label}: |HR^0(Z/{m})| = {co[0].order}")
                if co[1].order != m**count:
                    failures.append(
                        f"{entry.label}: |HR^1(Z/{m})| = {co[1].order}, expected {m**count}"
                    )
        return failures


class DifferentialCheck:
    """∂∂ = 0 for every complex of every corpus member."""

    name = "differential"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.entries:
            for theory in _complexes(entry):
                if not compose_check(entry.bundle.complex(theory)):
                    failures.append(f"{entry.label}: ∂∂ ≠ 0 in the {theory} complex")
        return failures


class SubcomplexCheck:
    """Degenerate tuples bound degenerate chains (quandles only)."""

    name = "subcomplex"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.quandles:
            for n in range(1, min(4, entry.bundle.chain_degree) + 1):
                if not is_degenerate_subcomplex(entry.rack, n):
                    failures.append(f"{entry.label}: degenerate ∂_{n} leaves CD")
        return failures


class SplittingCheck:
    """HR_n ≅ HQ_n ⊕ HD_n over Z and the configured moduli."""

    name = "splitting"

    def top_degree(self, entry: CorpusEntry) -> int:
        return min(COMPARISON_DEGREE, entry.max_degree)

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.quandles:
            top = self.top_degree(entry)
            for coeff in _coefficients(context.config.moduli):
                hr = homology(entry.rack, "rack", top, coeff, entry.bundle)
                hq = homology(entry.rack, "quandle", top, coeff, entry.bundle)
                hd = homology(entry.rack, "degenerate", top, coeff, entry.bundle)
                for n in range(top + 1):
                    if hr[n] != hq[n].direct_sum(hd[n]):
                        failures.append(
                            f"{entry.label}: HR_{n}({coeff}) = {hr[n]} but "
                            f"HQ ⊕ HD = {hq[n]} + {hd[n]}"
                        )
        return failures


class QuillenShiftCheck:
    """Dⁿ equals H^{n+1}; D⁰(Z/m) counts morphisms to the trivial quandle on m points."""

    name = "quillen-shift"

    def top_degree(self, entry: CorpusEntry) -> int:
        return min(COMPARISON_DEGREE - 1, entry.max_degree - 1)

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.entries:
            top = self.top_degree(entry)
            for theory in _theories(entry):
                for coeff in _coefficients(context.config.moduli):
                    shifted = cohomology(entry.rack, theory, top + 1, coeff, entry.bundle)
                    for n in range(top + 1):
                        d = quillen_cohomology(entry.rack, theory, n, coeff, entry.bundle)
                        if d != shifted[n + 1]:
                            failures.append(
                                f"{entry.label}: D^{n}({theory}, {coeff}) = {d}, "
                                f"H^{n + 1} = {shifted[n + 1]}"
                            )
            count = entry.orbits.orbit_count
            for m in context.config.orbit_moduli:
                d0 = quillen_cohomology(entry.rack, "rack", 0, CoefficientSpec(m), entry.bundle)
                if d0.order != m**count:
                    failures.append(f"{entry.label}: |D^0(Z/{m})| = {d0.order} ≠ {m}^{count}")
                if entry.rack.size <= DERIVATION_CHECK_SIZE:
                    morphisms = derivations(entry.rack, m)
                    if morphisms != d0.order:
                        failures.append(
                            f"{entry.label}: {morphisms} morphisms to trivial({m}) "
                            f"but |D^0| = {d0.order}"
                        )
        return failures


class CocycleCheck:
    """Cocycles modulo coboundaries agree with degree-2 cohomology."""

    name = "cocycles"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.entries:
            if entry.max_degree < 2:
                continue
            for theory in _theories(entry):
                for m in context.config.cocycle_moduli:
                    coeff = CoefficientSpec(m)
                    basis = two_cocycles(entry.rack, coeff, theory)
                    expected = cohomology(entry.rack, theory, 2, coeff, entry.bundle)[2]
                    if basis.group != expected:
                        failures.append(
                            f"{entry.label}: cocycles give {basis.group}, "
                            f"H^2({theory}, {coeff}) = {expected}"
                        )
                    bad = [
                        phi
                        for phi in basis.representatives
                        if not is_cocycle(entry.rack, phi, m)
                    ]
                    if bad:
                        failures.append(
                            f"{entry.label}: {len(bad)} representatives mod {m} are not cocycles"
                        )
        return failures


def _oracle_divisors(dense: list[list[int]]) -> list[int]:
    if not dense or not dense[0]:
        return []
    factors = sympy_invariant_factors(DM(dense, ZZ))
    return sorted(int(abs(d)) for d in factors if d)


class SmithOracleCheck:
    """Smith forms of small complexes agree with sympy's."""

    name = "snf-oracle"

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for label, rack in (("dihedral 3", make_dihedral(3)), ("trivial 2", make_trivial(2))):
            bundle = build_bundle(rack, ORACLE_DEGREE)
            for theory in THEORIES:
                complex_ = bundle.complex(theory)
                ranks: dict[int, int] = {}
                torsion: dict[int, list[int]] = {}
                for n in range(1, bundle.chain_degree + 1):
                    divisors = _oracle_divisors(complex_.boundary(n).to_dense())
                    if divisors != sorted(complex_.smith(n).divisors):
                        failures.append(
                            f"{label}: {theory} ∂_{n} divisors {complex_.smith(n).divisors}, "
                            f"sympy {divisors}"
                        )
                    ranks[n] = len(divisors)
                    torsion[n] = [d for d in divisors if d > 1]
                for n in range(ORACLE_DEGREE + 1):
                    expected = AbelianGroupPresentation.from_orders(
                        complex_.dim(n) - ranks.get(n, 0) - ranks.get(n + 1, 0),
                        torsion.get(n + 1, []),
                    )
                    if homology_at(complex_, n) != expected:
                        failures.append(f"{label}: {theory} H_{n} disagrees with sympy")
        return failures


class FreeStructureCheck:
    """Randomized axioms of the free rack and free quandle."""

    name = "free-structures"

    def run(self, context: SuiteContext) -> list[str]:
        config = context.config
        rng = random.Random(config.seed)
        failures = []
        length = config.free_max_length

        a = generator("a")
        if fr_op(a, a) == a:
            failures.append("free rack: a▷a = a, idempotence must fail")

        targets: list[tuple[str, FiniteRack]] = [
            (entry.label, entry.rack)
            for entry in context.entries
            if entry.rack.size <= EVALUATION_SIZE_LIMIT and entry.rack.size > 0
        ]

        for _ in range(config.free_samples):
            x, y, z = (random_element(rng, FREE_ALPHABET, length) for _ in range(3))
            if fr_op(x, fr_op(y, z)) != fr_op(fr_op(x, y), fr_op(x, z)):
                failures.append(f"free rack: self-distributivity fails at ({x}, {y}, {z})")
            if fr_inverse_op(x, fr_op(x, y)) != y or fr_op(x, fr_inverse_op(x, y)) != y:
                failures.append(f"free rack: left translation by {x} is not bijective at {y}")

            qx, qy, qz = fq_canonicalize(x), fq_canonicalize(y), fq_canonicalize(z)
            if fq_op(qx, qx) != qx:
                failures.append(f"free quandle: {qx}▷{qx} ≠ {qx}")
            if fq_op(qx, fq_op(qy, qz)) != fq_op(fq_op(qx, qy), fq_op(qx, qz)):
                failures.append(f"free quandle: self-distributivity fails at ({qx}, {qy}, {qz})")
            if fq_canonicalize(qx) != qx:
                failures.append(f"free quandle: canonical form of {qx} is not stable")

            for label, target in targets:
                assignment = {g: rng.randrange(target.size) for g in FREE_ALPHABET}
                image_x = extend_map(assignment, target, x)
                image_y = extend_map(assignment, target, y)
                if extend_map(assignment, target, fr_op(x, y)) != target.op[image_x][image_y]:
                    failures.append(f"{label}: evaluation is not a homomorphism at ({x}, {y})")
                if target.is_quandle() and extend_map(assignment, target, qx) != image_x:
                    failures.append(f"{label}: canonical form of {x} changes its value")
            if len(failures) > 20:
                break

        failures.extend(self._fq2_bijection())
        return failures

    def _fq2_bijection(self) -> list[str]:
        failures = []
        words = reduced_words(("a", "b"), FQ2_MAX_CONJUGATOR)
        conjugates = set()
        count = 0
        for w, g in product(words, ("a", "b")):
            if w.letters and w.letters[-1][0] == g:
                continue
            x = FreeQuandleElement(w, g)
            count += 1
            word = as_group_word(x)
            if len(word) != 2 * len(w) + 1:
                failures.append(f"FQ2: {x} represents the shortened word {word}")
            conjugates.add(word)
        if len(conjugates) != count:
            failures.append(f"FQ2: {count} canonical elements but {len(conjugates)} conjugates")
        return failures


class ModPCheck:
    """Universal coefficients agree with elimination over F_p."""

    name = "mod-p"

    def top_degree(self, entry: CorpusEntry) -> int:
        return min(COMPARISON_DEGREE, entry.max_degree)

    def run(self, context: SuiteContext) -> list[str]:
        failures = []
        for entry in context.entries:
            top = self.top_degree(entry)
            for theory in _complexes(entry):
                complex_ = entry.bundle.complex(theory)
                for p, n in product(FP_PRIMES, range(top + 1)):
                    via_smith = len(homology_mod(complex_, n, p).torsion)
                    direct = homology_dim_fp(complex_, n, p)
                    if via_smith != direct:
                        failures.append(
                            f"{entry.label}: {theory} H_{n}(F_{p}) has dimension {direct}, "
                            f"universal coefficients give {via_smith}"
                        )
        return failures


CHECKS = (
    TrivialHomologyCheck,
    LowDegreeCheck,
    DifferentialCheck,
    SubcomplexCheck,
    SplittingCheck,
    QuillenShiftCheck,
    CocycleCheck,
    SmithOracleCheck,
    FreeStructureCheck,
    ModPCheck,
)
