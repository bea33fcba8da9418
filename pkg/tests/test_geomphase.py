import cmath
import math

import numpy as np
import pytest

import oracles
from bargmann_phase.fock import TruncationDim, triple_product_trace
from bargmann_phase.geomphase import (
    PhaseScenario,
    StateSpec,
    TriangleConfig,
    circular_delta,
    closed_form_audit,
    closed_form_terms,
    geometric_phase,
    method_reconciliation,
    phase_space_trace,
    phase_space_trace_evolved,
    random_evolved_scenarios,
    random_independent_scenarios,
    run_reconciliation,
)
from bargmann_phase.pdistribution import ORIGIN, PhaseSpacePoint


def spec(occupation, z1, z2):
    return StateSpec.from_complex(occupation, z1, z2)


def random_spec(rng, scale=0.35, occupation=None):
    if occupation is None:
        occupation = (int(rng.integers(0, 2)), int(rng.integers(0, 2)))
    vals = rng.uniform(-scale, scale, 4)
    return spec(occupation, complex(vals[0], vals[1]), complex(vals[2], vals[3]))


def oracle_invariant(specs):
    return oracles.triple_invariant_independent(
        [s.occupation for s in specs],
        [(s.centers[0].to_complex(), s.centers[1].to_complex()) for s in specs],
    )


def test_state_spec_validation_and_views():
    s = spec((1, 0), 0.3 - 0.2j, 0.1j)
    assert s.centers[0].to_complex() == 0.3 - 0.2j
    assert s.label().z2 == 0.1j
    with pytest.raises(ValueError):
        StateSpec((2, 0), ORIGIN, ORIGIN)


def test_state_spec_density_operator_matches_label():
    dim = TruncationDim(16)
    s = spec((0, 0), 0.2 + 0.1j, -0.15j)
    rho = s.density_operator(dim)
    vec = oracles.two_mode_coherent_vector(0.2 + 0.1j, -0.15j, dim.n_max)
    np.testing.assert_allclose(rho.matrix, np.outer(vec, vec.conj()), atol=1e-10)


def test_pairing_matches_analytic_oracle_independent():
    rng = np.random.default_rng(83)
    for _ in range(20):
        specs = [random_spec(rng) for _ in range(3)]
        got = phase_space_trace(*specs)
        want = oracle_invariant(specs)
        assert abs(got.invariant - want) <= 1e-12


def test_pairing_matches_analytic_oracle_mixed_occupations():
    specs = [
        spec((1, 1), 0.2, -0.1j),
        spec((0, 1), 0.1 + 0.1j, 0.25),
        spec((1, 0), -0.3j, 0.05 - 0.2j),
    ]
    got = phase_space_trace(*specs)
    want = oracle_invariant(specs)
    assert abs(got.invariant - want) <= 1e-12


def test_pairing_matches_fock_oracle_independent():
    dim = TruncationDim(20)
    rng = np.random.default_rng(89)
    for _ in range(5):
        specs = [random_spec(rng, scale=0.3) for _ in range(3)]
        pairing = phase_space_trace(*specs)
        fock = triple_product_trace(*(s.density_operator(dim) for s in specs))
        assert abs(pairing.invariant - fock.invariant) <= 1e-8


def test_pairing_equal_states_is_one():
    for occupation in [(0, 0), (1, 0), (1, 1)]:
        s = spec(occupation, 0.2 - 0.1j, 0.05 + 0.3j)
        res = phase_space_trace(s, s, s)
        assert abs(res.invariant - 1.0) < 1e-12
        assert res.phase == pytest.approx(0.0, abs=1e-12)


def test_pairing_cyclic_and_reversal_symmetry():
    rng = np.random.default_rng(97)
    for _ in range(5):
        s1, s2, s3 = (random_spec(rng) for _ in range(3))
        base = phase_space_trace(s1, s2, s3)
        cyc = phase_space_trace(s2, s3, s1)
        rev = phase_space_trace(s3, s2, s1)
        assert abs(base.invariant - cyc.invariant) <= 1e-12
        assert abs(base.invariant - np.conjugate(rev.invariant)) <= 1e-12


def test_evolved_pairing_matches_fock_oracle():
    dim = TruncationDim(20)
    rng = np.random.default_rng(101)
    for _ in range(4):
        scenario = PhaseScenario.evolved(
            occupation=(int(rng.integers(0, 2)), int(rng.integers(0, 2))),
            vertex=(
                PhaseSpacePoint(*rng.uniform(-0.3, 0.3, 2)),
                PhaseSpacePoint(*rng.uniform(-0.3, 0.3, 2)),
            ),
            theta1=rng.uniform(0.0, math.pi),
            theta2=rng.uniform(0.0, math.pi),
        )
        pairing = scenario.pairing_invariant()
        fock = scenario.fock_invariant(dim)
        assert abs(pairing.invariant - fock.invariant) <= 1e-8


def test_evolved_pairing_zero_angles_gives_unit_invariant():
    s = spec((1, 1), 0.25, -0.2j)
    res = phase_space_trace_evolved(s, 0.0, 0.0)
    assert abs(res.invariant - 1.0) < 1e-12
    assert res.phase == pytest.approx(0.0, abs=1e-12)


def test_evolved_triangle_vertices_follow_label_map():
    scenario = PhaseScenario.evolved((1, 1), (PhaseSpacePoint(1.0, 0.0), ORIGIN), math.pi / 2, 0.0)
    tri = scenario.triangle()
    b1, b2 = tri.vertex_b
    assert b1.to_complex() == pytest.approx(0.0, abs=1e-15)
    assert b2.to_complex() == pytest.approx(-1j, abs=1e-15)
    # theta2 = 0 keeps the third vertex equal to the second
    c1, c2 = tri.vertex_c
    assert c1.to_complex() == pytest.approx(b1.to_complex(), abs=1e-15)
    assert c2.to_complex() == pytest.approx(b2.to_complex(), abs=1e-15)


def test_transcribed_kernel_fails_equal_states_sanity():
    # the verbatim kernel transcription is kept for the audit trail; its
    # asymmetric second-order block breaks the Tr(rho^3) = 1 sanity bound
    # that the derived kernel satisfies
    s = spec((1, 1), 0.2, 0.1)
    derived = phase_space_trace(s, s, s, kernel="derived")
    transcribed = phase_space_trace(s, s, s, kernel="transcribed")
    assert abs(derived.invariant - 1.0) < 1e-12
    assert abs(transcribed.invariant - 1.0) > 0.1


def test_unknown_kernel_rejected():
    s = spec((0, 0), 0.1, 0.2)
    with pytest.raises(ValueError):
        phase_space_trace(s, s, s, kernel="mystery")


def test_closed_form_terms_hand_worked_triangle():
    # mode-1 vertices (0,0), (1,0), (0,1), mode 2 at the origin:
    # cycle = 1, x1 = y1 = 1, x2 = 1, y2 = 0
    tri = TriangleConfig(
        vertex_a=(ORIGIN, ORIGIN),
        vertex_b=(PhaseSpacePoint(1.0, 0.0), ORIGIN),
        vertex_c=(PhaseSpacePoint(0.0, 1.0), ORIGIN),
    )
    terms = closed_form_terms(tri)
    assert terms.symplectic_sum == 1.0
    assert (terms.x1, terms.y1) == (1.0, 1.0)
    assert (terms.x2, terms.y2) == (1.0, 0.0)
    assert terms.phase((0, 0)) == pytest.approx(1.0, abs=1e-15)
    assert terms.phase((0, 1)) == pytest.approx(1.0, abs=1e-15)
    assert terms.phase((1, 0)) == pytest.approx(1.0 + math.pi / 4, abs=1e-15)
    assert terms.phase((1, 1)) == pytest.approx(1.0 + math.pi / 4, abs=1e-15)


def test_closed_form_origin_triangle_is_zero():
    tri = TriangleConfig((ORIGIN, ORIGIN), (ORIGIN, ORIGIN), (ORIGIN, ORIGIN))
    for occupation in [(0, 0), (1, 1)]:
        res = geometric_phase(tri, occupation)
        assert res.phase == 0.0
        assert res.invariant == 1.0 + 0.0j


def test_closed_form_vacuum_reduction_is_exact():
    # with no occupied mode the form is the bilinear sum, which is the
    # exact coherent-state phase
    rng = np.random.default_rng(103)
    for _ in range(10):
        scenario = PhaseScenario.independent(
            (0, 0),
            *(
                (PhaseSpacePoint(*rng.uniform(-0.6, 0.6, 2)), PhaseSpacePoint(*rng.uniform(-0.6, 0.6, 2)))
                for _ in range(3)
            ),
        )
        printed = scenario.printed_invariant().phase
        exact = scenario.coherent_invariant().phase
        assert circular_delta(printed, exact) < 1e-12


def test_geometric_phase_unit_modulus():
    tri = TriangleConfig(
        (PhaseSpacePoint(0.3, 0.1), ORIGIN),
        (PhaseSpacePoint(-0.2, 0.4), PhaseSpacePoint(0.1, 0.0)),
        (ORIGIN, PhaseSpacePoint(0.2, -0.3)),
    )
    res = geometric_phase(tri, (1, 1))
    assert abs(res.invariant) == pytest.approx(1.0, rel=1e-15)
    assert res.phase == pytest.approx(cmath.phase(res.invariant), abs=1e-12)


def test_circular_delta_wraps():
    assert circular_delta(math.pi - 0.01, -math.pi + 0.01) == pytest.approx(0.02, abs=1e-12)
    assert circular_delta(0.3, 0.1) == pytest.approx(0.2, abs=1e-15)
    assert circular_delta(0.0, math.pi) == pytest.approx(math.pi, abs=1e-15)


def test_method_reconciliation_ok_on_vacuum_triangle():
    scenario = PhaseScenario.independent(
        (0, 0),
        (ORIGIN, ORIGIN),
        (PhaseSpacePoint(1.0, 0.0), ORIGIN),
        (PhaseSpacePoint(0.0, 1.0), ORIGIN),
    )
    row = method_reconciliation(scenario, dim=TruncationDim(20))
    assert row.flag == "ok"
    assert set(row.results) == {
        "fock_oracle",
        "phase_space_pairing",
        "coherent_closed_form",
        "printed_closed_form",
    }
    for method in row.results:
        assert row.phase_of(method) == pytest.approx(1.0, abs=1e-7)
    assert row.abs_delta_max <= 1e-6


def test_method_reconciliation_occupied_reports_printed_delta():
    scenario = PhaseScenario.evolved(
        (1, 1), (PhaseSpacePoint(0.3, 0.0), PhaseSpacePoint(0.0, 0.2)), 0.9, 1.1
    )
    row = method_reconciliation(scenario, dim=TruncationDim(25))
    assert row.flag == "ok"
    assert "coherent_closed_form" not in row.results
    assert "fock_oracle|phase_space_pairing" in row.deltas
    # the reference form's delta is recorded but kept out of the gate
    assert "phase_space_pairing|printed_closed_form" in row.deltas
    assert row.abs_delta_max <= 1e-6


def test_method_reconciliation_undefined_propagates():
    # |Delta| = 1 on an occupied mode zeroes the (1 - |Delta|^2) overlap
    # factor, so every invariant vanishes and no phase is defined
    scenario = PhaseScenario.independent(
        (1, 1),
        (ORIGIN, ORIGIN),
        (PhaseSpacePoint(1.0, 0.0), ORIGIN),
        (PhaseSpacePoint(0.0, 1.0), ORIGIN),
    )
    row = method_reconciliation(scenario, dim=TruncationDim(20))
    assert row.flag == "undefined"
    assert row.abs_delta_max is None
    assert row.deltas == {}
    assert row.phase_of("fock_oracle") is None
    assert row.phase_of("printed_closed_form") is None


def test_random_scenario_generators_are_seeded_and_bounded():
    a = random_evolved_scenarios(6, seed=5)
    b = random_evolved_scenarios(6, seed=5)
    assert a == b
    assert a != random_evolved_scenarios(6, seed=6)
    for scenario in a:
        assert scenario.is_evolved
        assert 0.0 <= scenario.theta1 < math.pi
        assert 0.0 <= scenario.theta2 < math.pi
        for pt in scenario.vertex_a:
            assert abs(pt.q) <= 0.35 and abs(pt.p) <= 0.35
    c = random_independent_scenarios(4, seed=9)
    assert c == random_independent_scenarios(4, seed=9)
    for scenario in c:
        assert not scenario.is_evolved
        assert scenario.vertex_b is not None and scenario.vertex_c is not None


def test_run_reconciliation_small_suite_all_ok():
    scenarios = random_evolved_scenarios(3, seed=21) + random_independent_scenarios(3, seed=22)
    report = run_reconciliation(scenarios, dim=TruncationDim(22), tolerance=1e-6)
    assert report.all_ok
    assert report.disagreements == 0
    assert len(report.rows) == 6
    assert report.n_max == 22


def test_closed_form_audit_quantifies_discrepancy():
    scenarios = random_independent_scenarios(10, seed=33) + random_evolved_scenarios(6, seed=34)
    report = run_reconciliation(scenarios, dim=TruncationDim(22))
    audit = closed_form_audit(report)
    assert audit["vacuum_abs_delta"]["count"] > 0
    assert audit["occupied_abs_delta"]["count"] > 0
    assert audit["vacuum_abs_delta"]["max"] < 1e-9
    assert audit["occupied_abs_delta"]["max"] > 1e-3
    ratio = audit["small_displacement_phase_ratio"]
    assert ratio["count"] >= 6
    assert 1.8 < ratio["mean"] < 2.2
    flip = audit["sign_flip_probe"]
    assert flip["abs_delta"] is not None
    assert flip["abs_delta"] > 2.5
    assert "finding" in audit
