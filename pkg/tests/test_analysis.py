import math
import random

import pytest

from lusym import (
    InputError,
    PureState,
    Support,
    analyze,
    compare_strata,
    fixture_state,
    solve_symmetry_group,
    verify_symmetry,
)
from lusym.analysis import (
    STRATA_A_CLOSURE_CONTAINS_B,
    STRATA_B_CLOSURE_CONTAINS_A,
    STRATA_EQUAL,
    STRATA_INCOMPARABLE,
)

from conftest import random_state_on, random_support


def test_verify_bell_exact():
    psi = fixture_state("bell")
    group = solve_symmetry_group(psi.support())
    v = verify_symmetry(psi, group, samples=8, seed=0)
    assert v.passed
    assert v.max_deviation < 1e-12
    kinds = [c.kind for c in v.checks]
    assert kinds.count("finite") == 1
    assert kinds.count("torus") == 8


def test_verify_no_torus_part():
    labels = [format(x, "03b") for x in range(8)]
    psi = PureState.from_amplitudes({lab: math.sqrt(1 / 8) for lab in labels})
    group = solve_symmetry_group(psi.support())
    assert group.torus_rank == 0
    v = verify_symmetry(psi, group, samples=8, seed=1)
    assert v.passed
    assert all(c.kind == "finite" for c in v.checks)
    assert len(v.checks) == len(group.finite_generators)


def test_verify_detects_broken_symmetry():
    eps = 1e-3
    norm = math.sqrt(1 + eps**2)
    psi = PureState.from_amplitudes(
        {
            "00": 1 / math.sqrt(2) / norm,
            "11": 1 / math.sqrt(2) / norm,
            "01": eps / norm,
        }
    )
    group = solve_symmetry_group(Support.from_labels(["00", "11"]))
    v = verify_symmetry(psi, group, samples=8, tol=1e-6, seed=0)
    assert not v.passed
    assert v.max_deviation > 1e-4


def test_verify_deterministic_across_runs():
    # a state that is not symmetric gives nonzero, seed-dependent deviations,
    # which is where determinism is actually observable
    eps = 1e-3
    norm = math.sqrt(1 + eps**2)
    psi = PureState.from_amplitudes(
        {
            "00": 1 / math.sqrt(2) / norm,
            "11": 1 / math.sqrt(2) / norm,
            "01": eps / norm,
        }
    )
    group = solve_symmetry_group(Support.from_labels(["00", "11"]))
    v1 = verify_symmetry(psi, group, samples=6, tol=1e-6, seed=3)
    v2 = verify_symmetry(psi, group, samples=6, tol=1e-6, seed=3)
    assert v1 == v2
    v3 = verify_symmetry(psi, group, samples=6, tol=1e-6, seed=4)
    assert [c.deviation for c in v1.checks] != [c.deviation for c in v3.checks]


def test_analyze_bell_report():
    rep = analyze(fixture_state("bell"))
    assert rep.group.torus_rank == 1
    assert rep.semistable
    assert not rep.theta_continuous
    assert len(rep.catalog.circuits) == 1
    assert rep.monomials[0].terms == (("00", 1, 0), ("11", 1, 0))
    assert abs(rep.monomial_values[0] - 0.5) < 1e-12
    assert rep.defect_values == (0.0, 0.0)
    assert not rep.generic
    assert rep.larger_symmetry_possible
    assert rep.verification.passed
    assert rep.sl_report.holds


def test_analyze_generic_state():
    psi = PureState.from_amplitudes({"00": 0.6, "11": 0.8})
    rep = analyze(psi)
    assert rep.generic
    assert not rep.larger_symmetry_possible
    assert abs(rep.defect_values[0] - (0.36 - 0.64)) < 1e-12


def test_analyze_rejects_unnormalized():
    with pytest.raises(InputError):
        analyze(PureState.from_amplitudes({"00": 1.0, "11": 1.0}))


def test_analyze_theta_continuous_state():
    rep = analyze(fixture_state("w3"))
    assert rep.theta_continuous
    assert rep.catalog.circuits == ()
    assert not rep.semistable
    assert all(abs(v - 1 / 3) < 1e-12 for v in rep.defect_values)
    assert rep.generic


def test_analyze_random_states_verify_clean():
    rng = random.Random(113)
    for _ in range(15):
        sup = random_support(rng, rng.randint(1, 4), 6)
        rep = analyze(random_state_on(rng, sup))
        assert rep.verification.passed
        assert rep.verification.max_deviation < 1e-9


def test_compare_strata_equal():
    a = Support.from_labels(["00", "11"])
    assert compare_strata(a, a) == STRATA_EQUAL


def test_compare_strata_closure_order():
    ghz = Support.from_labels(["0000", "1111"])
    full = Support.from_labels([format(x, "04b") for x in range(16)])
    # the full support has the smallest group: its stratum is the most
    # generic and its closure reaches the GHZ stratum
    assert compare_strata(ghz, full) == STRATA_B_CLOSURE_CONTAINS_A
    assert compare_strata(full, ghz) == STRATA_A_CLOSURE_CONTAINS_B


def test_compare_strata_incomparable():
    a = Support.from_labels(["0000", "1100"])
    b = Support.from_labels(["0000", "0011"])
    assert compare_strata(a, b) == STRATA_INCOMPARABLE


def test_compare_strata_consistent_with_groups():
    rng = random.Random(127)
    from lusym import group_contains

    for _ in range(40):
        n = rng.randint(2, 4)
        sa = random_support(rng, n, 6)
        sb = random_support(rng, n, 6)
        verdict = compare_strata(sa, sb)
        ga = solve_symmetry_group(sa)
        gb = solve_symmetry_group(sb)
        a_in_b = group_contains(gb, ga)
        b_in_a = group_contains(ga, gb)
        expected = {
            (True, True): STRATA_EQUAL,
            (True, False): STRATA_A_CLOSURE_CONTAINS_B,
            (False, True): STRATA_B_CLOSURE_CONTAINS_A,
            (False, False): STRATA_INCOMPARABLE,
        }[(a_in_b, b_in_a)]
        assert verdict == expected
