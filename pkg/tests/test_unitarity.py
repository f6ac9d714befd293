import cmath
import math

import numpy as np
import pytest

from qlgas import (
    PARITY,
    BlockBandWeights,
    NonUnitary,
    ScalarBandWeights,
    Trivial,
    TwoStepWeights,
    block_band_residuals,
    build_pair_matrix,
    build_qlga_matrix,
    build_two_component_weights,
    classify_no_go,
    parity_residuals,
    scalar_band_residuals,
    two_step_residuals,
)

INV_SQRT2 = 1 / math.sqrt(2)


# ---------------------------------------------------------------- scalar band


def test_scalar_residuals_identity_rule():
    res = scalar_band_residuals(ScalarBandWeights([0, 1, 0]))
    assert np.max(np.abs(res)) == 0.0


def test_scalar_residuals_offset_two():
    # the offset-2 product is w_{+1} conj(w_{-1}) = 1/2
    res = scalar_band_residuals(ScalarBandWeights([INV_SQRT2, 0, INV_SQRT2]))
    assert abs(res[2] - 0.5) < 1e-15
    assert abs(res[0]) < 1e-15 and abs(res[1]) < 1e-15


def test_scalar_residuals_pure_translation_r2():
    w = np.zeros(5, dtype=complex)
    w[4] = cmath.exp(1j * math.pi / 3)
    res = scalar_band_residuals(ScalarBandWeights(w))
    assert np.max(np.abs(res)) < 1e-15


def test_classify_diagonal_phase():
    phase = cmath.exp(0.7j)
    verdict = classify_no_go(ScalarBandWeights([0, phase, 0]))
    assert verdict == Trivial(k=0, phase=phase)


def test_classify_shift_convention():
    # sole surviving w_{-r} means the rule is the r-step shift
    verdict = classify_no_go(ScalarBandWeights([1, 0, 0]))
    assert verdict == Trivial(k=1, phase=1 + 0j)


def test_classify_non_unitary_magnitude():
    verdict = classify_no_go(ScalarBandWeights([0.6, 0, 0.8]))
    assert isinstance(verdict, NonUnitary)
    assert abs(verdict.max_residual - 0.48) < 1e-15


def test_classify_requires_positive_tol():
    with pytest.raises(ValueError):
        classify_no_go(ScalarBandWeights([0, 1, 0]), tol=0.0)


def test_classify_random_weights_never_pass():
    rng = np.random.default_rng(42)
    for _ in range(2000):
        r = int(rng.integers(1, 4))
        w = rng.normal(size=2 * r + 1) + 1j * rng.normal(size=2 * r + 1)
        assert isinstance(classify_no_go(ScalarBandWeights(w), tol=1e-10), NonUnitary)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_classify_every_shift_times_phase(r):
    for e in range(-r, r + 1):
        for phi in (0.0, 0.4, -1.3, 2.9):
            w = np.zeros(2 * r + 1, dtype=complex)
            w[e + r] = cmath.exp(1j * phi)
            verdict = classify_no_go(ScalarBandWeights(w), tol=1e-12)
            assert isinstance(verdict, Trivial)
            assert verdict.k == -e
            assert abs(verdict.phase - cmath.exp(1j * phi)) < 1e-15


def test_classify_perturbed_shift_flips_to_non_unitary():
    rng = np.random.default_rng(5)
    for _ in range(200):
        r = int(rng.integers(1, 4))
        w = np.zeros(2 * r + 1, dtype=complex)
        w[rng.integers(0, 2 * r + 1)] = cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        noise = rng.normal(size=2 * r + 1) + 1j * rng.normal(size=2 * r + 1)
        noise *= 1e-6 / np.linalg.norm(noise)
        verdict = classify_no_go(ScalarBandWeights(w + noise), tol=1e-10)
        assert isinstance(verdict, NonUnitary)


# ------------------------------------------------------------- two-step rules


def test_two_step_interesting_family():
    # c = d = 0 with |b| = |e| = 1 leaves a unitary pair block
    w = TwoStepWeights(0, cmath.exp(0.3j), 0, 0, cmath.exp(-1.1j), 0)
    assert np.max(np.abs(two_step_residuals(w))) < 1e-15


def test_two_step_identity_assignment():
    # the diagonal entries of the alternating-row band matrix are b and e
    w = TwoStepWeights(0, 1, 0, 0, 1, 0)
    assert np.max(np.abs(two_step_residuals(w))) == 0.0


def test_two_step_all_ones():
    res = two_step_residuals(TwoStepWeights(1, 1, 1, 1, 1, 1))
    assert res[0] == 2.0 + 0j


# ---------------------------------------------------------------- pair matrix


def test_pair_matrix_theta0_swaps():
    assert np.array_equal(build_pair_matrix(0.0), np.array([[0, 1], [1, 0]], dtype=complex))


def test_pair_matrix_theta_pi2_no_flow():
    s = build_pair_matrix(math.pi / 2)
    assert np.allclose(s, np.array([[1j, 0], [0, 1j]]), atol=1e-15)


def test_pair_matrix_theta_pi4():
    s = build_pair_matrix(math.pi / 4)
    expected = np.array([[1j * INV_SQRT2, INV_SQRT2], [INV_SQRT2, 1j * INV_SQRT2]])
    assert np.max(np.abs(s - expected)) < 1e-15


def test_pair_matrix_unitary_sweep():
    for theta in np.linspace(-math.pi, math.pi, 37):
        s = build_pair_matrix(theta)
        assert np.max(np.abs(s.conj().T @ s - np.eye(2))) < 1e-15


# -------------------------------------------------------- two-component rules


def test_weights_rho0_reproduce_streaming_blocks():
    theta = 0.9
    s, c = math.sin(theta), math.cos(theta)
    w = build_two_component_weights(theta, 0.0)
    assert np.array_equal(w.w_zero, np.zeros((2, 2)))
    assert np.array_equal(w.w_minus, np.array([[0, 1j * s], [0, c]]))
    assert np.array_equal(w.w_plus, np.array([[c, 0], [1j * s, 0]]))


def test_weights_rho_pi2_is_onsite_mixer():
    w = build_two_component_weights(math.pi / 4, math.pi / 2)
    assert np.max(np.abs(w.w_minus)) < 1e-16
    assert np.max(np.abs(w.w_plus)) < 1e-16
    assert np.max(np.abs(w.w_zero @ w.w_zero.conj().T - np.eye(2))) < 1e-15


def test_weights_satisfy_constraints_at_pi4_pi6():
    w = build_two_component_weights(math.pi / 4, math.pi / 6)
    assert all(np.max(np.abs(r)) < 1e-12 for r in block_band_residuals(w))
    assert all(np.max(np.abs(r)) < 1e-12 for r in parity_residuals(w))


def test_block_residuals_onsite_unitary():
    z = np.zeros((2, 2))
    w0 = build_pair_matrix(1.2)
    res = block_band_residuals(BlockBandWeights(z, w0, z))
    assert all(np.max(np.abs(r)) < 1e-15 for r in res)


def test_block_residuals_all_identity():
    eye = np.eye(2)
    res = block_band_residuals(BlockBandWeights(eye, eye, eye))
    assert np.array_equal(res[0], 2 * np.eye(2))


def test_parity_residuals_identity_blocks():
    eye = np.eye(2)
    res = parity_residuals(BlockBandWeights(eye, eye, eye))
    assert all(np.max(np.abs(r)) == 0.0 for r in res)


def test_parity_residuals_detect_asymmetric_onsite():
    eye = np.eye(2)
    w0 = np.diag([1.0, -1.0]).astype(complex)
    res = parity_residuals(BlockBandWeights(eye, w0, eye))
    assert np.max(np.abs(res[1])) == 2.0


def test_parity_matrix_constant():
    assert np.array_equal(PARITY, np.array([[0, 1], [1, 0]], dtype=complex))


# ------------------------------------------------------------ lattice-gas 4x4


def test_qlga_matrix_figure_run_parameters():
    s = build_qlga_matrix(math.pi / 4, 0.0, -3 * math.pi / 4)
    assert s[0, 0] == 1.0
    assert abs(s[3, 3] - cmath.exp(-3j * math.pi / 4)) < 1e-16
    assert np.array_equal(s[1:3, 1:3], build_pair_matrix(math.pi / 4))
    assert np.max(np.abs(s.conj().T @ s - np.eye(4))) < 1e-15


def test_qlga_matrix_theta0_is_pair_swap():
    s = build_qlga_matrix(0.0, 0.0, 0.0)
    perm = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
    assert np.array_equal(s, perm)


def test_qlga_matrix_unitary_on_parameter_grid():
    grid = np.linspace(-math.pi, math.pi, 16)
    eye = np.eye(4)
    for theta in grid:
        for alpha in grid:
            for beta in grid:
                s = build_qlga_matrix(float(theta), float(alpha), float(beta))
                assert np.max(np.abs(s.conj().T @ s - eye)) <= 1e-15


def test_qlga_matrix_middle_block_identity_at_alpha0():
    for theta in np.linspace(0, 2 * math.pi, 9):
        for beta in (-3 * math.pi / 4, 0.0, 1.1):
            s = build_qlga_matrix(float(theta), 0.0, beta)
            assert np.array_equal(s[1:3, 1:3], build_pair_matrix(float(theta)))


def test_qlga_matrix_middle_block_determinant():
    rng = np.random.default_rng(11)
    for _ in range(50):
        theta, alpha, beta = rng.uniform(-math.pi, math.pi, size=3)
        s = build_qlga_matrix(theta, alpha, beta)
        assert abs(abs(np.linalg.det(s[1:3, 1:3])) - 1.0) < 1e-14
        zero_pattern = np.ones((4, 4), dtype=bool)
        zero_pattern[0, 0] = zero_pattern[3, 3] = False
        zero_pattern[1:3, 1:3] = False
        assert np.all(s[zero_pattern] == 0)
