"""End-to-end analysis: numeric verification, the full per-state report, and
stratum comparison between supports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .circuits import CircuitCatalog, enumerate_circuits, polytope_classification
from .errors import DimensionError, InputError, InternalError
from .invariants import (
    InvariantMonomial,
    SlGeneratorReport,
    evaluate,
    monomial_from_circuit,
    single_sl_generator_check,
)
from .normalizer import (
    DefectPolynomial,
    NormalizerDescription,
    balance_defect_polynomials,
    compute_normalizer,
)
from .states import PhaseVector, PureState, Support, apply_phase_element
from .symmetry import (
    DiagonalSymmetryGroup,
    QubitActionProfile,
    group_contains,
    qubit_action_profile,
    solve_symmetry_group,
)

DEFAULT_TOL = 1e-9
DEFAULT_SAMPLES = 8

# Thresholds for the genericity flag: a support amplitude or a balance defect
# below this is treated as vanishing.
GENERIC_FLOOR = 1e-9

STRATA_EQUAL = "equal"
STRATA_A_CLOSURE_CONTAINS_B = "a_closure_contains_b"
STRATA_B_CLOSURE_CONTAINS_A = "b_closure_contains_a"
STRATA_INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class GeneratorCheck:
    kind: str  # "finite" or "torus"
    index: int
    deviation: float


@dataclass(frozen=True)
class SymmetryVerification:
    passed: bool
    max_deviation: float
    tol: float
    samples: int
    seed: int
    checks: tuple[GeneratorCheck, ...]


def _deviation(a: PureState, b: PureState) -> float:
    labels = set(a.amplitudes) | set(b.amplitudes)
    return max(abs(a.amplitude(lab) - b.amplitude(lab)) for lab in labels)


def verify_symmetry(
    psi: PureState,
    group: DiagonalSymmetryGroup,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> SymmetryVerification:
    """Numerically confirm that the group fixes the state.

    Every finite generator is applied once; the continuous part is probed at
    `samples` random rational torus points drawn from a seeded generator.
    """
    if group.n != psi.n:
        raise DimensionError(f"group on {group.n} qubits, state on {psi.n}")
    rng = random.Random(seed)
    checks = []
    for i, gen in enumerate(group.finite_generators):
        checks.append(GeneratorCheck("finite", i, _deviation(psi, apply_phase_element(gen, psi))))
    if group.torus_rank > 0:
        denom = 2**20
        for s in range(samples):
            total = [Fraction(0)] * (group.n + 1)
            for vec in group.torus_basis:
                coeff = Fraction(rng.randrange(denom), denom)
                for i, x in enumerate(vec):
                    total[i] += coeff * x
            point = PhaseVector(tuple(f % 1 for f in total[:-1]), total[-1] % 1)
            checks.append(GeneratorCheck("torus", s, _deviation(psi, apply_phase_element(point, psi))))
    max_dev = max((c.deviation for c in checks), default=0.0)
    return SymmetryVerification(
        passed=max_dev <= tol,
        max_deviation=max_dev,
        tol=tol,
        samples=samples,
        seed=seed,
        checks=tuple(checks),
    )


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the package can say about one state."""

    state: PureState
    support: Support
    group: DiagonalSymmetryGroup
    profile: QubitActionProfile
    catalog: CircuitCatalog
    monomials: tuple[InvariantMonomial, ...]
    monomial_values: tuple[complex, ...]
    polytopes: tuple[str, ...]
    sl_report: SlGeneratorReport
    normalizer: NormalizerDescription
    defects: tuple[DefectPolynomial, ...]
    defect_values: tuple[float, ...]
    verification: SymmetryVerification
    semistable: bool
    theta_continuous: bool
    generic: bool
    larger_symmetry_possible: bool
    tol: float
    seed: int


def analyze(
    psi: PureState,
    tol: float = DEFAULT_TOL,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> AnalysisReport:
    """Full deterministic analysis of a normalized sparse state."""
    if not psi.is_normalized(tol):
        raise InputError(
            f"state norm is {psi.norm():.12f}, not 1 within {tol:.0e}; "
            "normalize before analysis"
        )
    support = psi.support()
    group = solve_symmetry_group(support)
    profile = qubit_action_profile(support, group)
    catalog = enumerate_circuits(support)

    monomials = tuple(monomial_from_circuit(c) for c in catalog.circuits)
    if group.theta_continuous:
        for mono in monomials:
            a, b = mono.bidegree
            if a != b:
                raise InternalError(
                    "continuous global phase must force balanced bidegrees"
                )
    values = tuple(evaluate(m, psi) for m in monomials)
    polytopes = tuple(polytope_classification(c) for c in catalog.circuits)
    sl_report = single_sl_generator_check(catalog)
    norm_desc = compute_normalizer(support)
    defects = tuple(balance_defect_polynomials(support))
    defect_values = tuple(d.evaluate(psi) for d in defects)
    verification = verify_symmetry(psi, group, samples=samples, tol=tol, seed=seed)

    generic = all(abs(c) >= GENERIC_FLOOR for c in psi.amplitudes.values()) and all(
        abs(v) >= GENERIC_FLOOR for v in defect_values
    )
    return AnalysisReport(
        state=psi,
        support=support,
        group=group,
        profile=profile,
        catalog=catalog,
        monomials=monomials,
        monomial_values=values,
        polytopes=polytopes,
        sl_report=sl_report,
        normalizer=norm_desc,
        defects=defects,
        defect_values=defect_values,
        verification=verification,
        semistable=catalog.semistable,
        theta_continuous=group.theta_continuous,
        generic=generic,
        larger_symmetry_possible=any(abs(v) < GENERIC_FLOOR for v in defect_values),
        tol=tol,
        seed=seed,
    )


def compare_strata(support_a: Support, support_b: Support) -> str:
    """Closure order between the symmetry strata of two supports.

    A smaller symmetry group means a more generic stratum whose closure
    contains the strata of larger groups.
    """
    if support_a.n != support_b.n:
        raise DimensionError("supports live on different qubit counts")
    ga = solve_symmetry_group(support_a)
    gb = solve_symmetry_group(support_b)
    a_in_b = group_contains(gb, ga)
    b_in_a = group_contains(ga, gb)
    if a_in_b and b_in_a:
        return STRATA_EQUAL
    if a_in_b:
        return STRATA_A_CLOSURE_CONTAINS_B
    if b_in_a:
        return STRATA_B_CLOSURE_CONTAINS_A
    return STRATA_INCOMPARABLE
