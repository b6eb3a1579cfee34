"""
Tests for regime classification, effective Hamiltonians and speed predictions.
"""

import numpy as np
import pytest

from jchsim.core.dynamics import evolve_series, initial_localized_superposition
from jchsim.core.effective import (
    DETUNING_SIGN_CAVEAT,
    NO_PREDICTION,
    Regime,
    classify_regime,
    effective_hamiltonian,
    fidelity_defect,
    nnn_hop_matrix,
    predicted_speeds,
    x_term_commutator_check,
    x_term_defect,
    x_term_matrix,
)
from jchsim.core.observables import measure_speed
from jchsim.domain.errors import ValidationError
from jchsim.domain.params import ChainParams, CouplingProfile
from jchsim.domain.state import Mode, SingleExcitationState, basis_index
from jchsim.spectral.adjacency import uniform_adjacency_eigs
from jchsim.spectral.blocks import jch_spectrum


def chain(kappa_over_beta, delta_over_beta=0.0, n=20):
    return ChainParams(n, beta=1.0, kappa=kappa_over_beta, delta=delta_over_beta)


class TestClassifyRegime:
    """Tests for classify_regime()."""

    @pytest.mark.parametrize(
        "kappa_over_beta,delta_over_beta,regime",
        [
            (1e-3, 0.0, Regime.SMALL_KAPPA),
            (1e-2, 0.0, Regime.SMALL_KAPPA),
            (1e2, 0.0, Regime.LARGE_KAPPA),
            (1e3, 0.0, Regime.LARGE_KAPPA),
            (1.0, 0.0, Regime.INTERMEDIATE),
            (1.0, 1e3, Regime.LARGE_DETUNING),
            (1.0, -1e3, Regime.LARGE_DETUNING),
            (1.0, 50.0, Regime.INTERMEDIATE),
            (10.0, 500.0, Regime.INTERMEDIATE),
        ],
    )
    def test_thresholds(self, kappa_over_beta, delta_over_beta, regime):
        """Test each threshold lands in the expected regime."""
        assert classify_regime(chain(kappa_over_beta, delta_over_beta)) is regime

    def test_invalid_params(self):
        """Test invalid chains are refused."""
        with pytest.raises(ValidationError):
            classify_regime(
                ChainParams(3, beta=1.0, kappa=1.0, profile=CouplingProfile.custom([1.0]))
            )


class TestPredictedSpeeds:
    """Tests for predicted_speeds()."""

    def test_small_kappa(self):
        """Test both modes move at kappa."""
        prediction = predicted_speeds(chain(1e-3))
        assert prediction.j_photonic == prediction.j_atomic == pytest.approx(1e-3)
        assert prediction.regime is Regime.SMALL_KAPPA

    def test_large_kappa(self):
        """Test the photon moves at 2 kappa and the atom stays put."""
        prediction = predicted_speeds(chain(1e3))
        assert prediction.j_photonic == pytest.approx(2e3)
        assert prediction.j_atomic == 0.0

    def test_large_detuning(self):
        """Test J_at = 2 kappa beta^2 / (delta^2 + 4 beta^2) at delta = 1e3 beta."""
        prediction = predicted_speeds(chain(1.0, 1e3))
        assert prediction.j_atomic == pytest.approx(2e-6, rel=1e-4)
        assert prediction.j_photonic == pytest.approx(2.0 - 4e-6, rel=1e-9)
        assert DETUNING_SIGN_CAVEAT in prediction.validity_note

    def test_detuning_limit_matches_large_kappa(self):
        """Test large-detuning speeds tend to (2 kappa, 0)."""
        prediction = predicted_speeds(chain(1.0, 1e8))
        assert prediction.j_photonic == pytest.approx(2.0)
        assert prediction.j_atomic == pytest.approx(0.0, abs=1e-15)

    def test_intermediate_marker(self):
        """Test intermediate params carry the no-prediction marker."""
        prediction = predicted_speeds(chain(1.0))
        assert not prediction.has_prediction
        assert prediction.j_photonic is None and prediction.j_atomic is None
        assert prediction.validity_note == NO_PREDICTION
        assert prediction.to_dict()["regime"] == "intermediate"

    @pytest.mark.parametrize("params", [chain(1e-3), chain(1e3), chain(1.0, 1e3), chain(5.0, -1e4)])
    def test_ordering(self, params):
        """Test j_photonic ≥ j_atomic ≥ 0."""
        prediction = predicted_speeds(params)
        assert prediction.j_photonic >= prediction.j_atomic >= 0


class TestEffectiveHamiltonian:
    """Tests for effective_hamiltonian()."""

    def test_small_kappa(self):
        """Test -(kappa/2) A⊗I at N = 3."""
        params = chain(1e-3, n=3)
        adjacency = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
        expected = -(1e-3 / 2) * np.kron(adjacency, np.eye(2))
        assert np.allclose(effective_hamiltonian(params).matrix, expected, atol=1e-15)

    def test_large_kappa(self):
        """Test only photon sites are coupled."""
        matrix = effective_hamiltonian(chain(1e3, n=4)).matrix
        atoms = [basis_index(q, Mode.ATOMIC, 4) for q in range(1, 5)]
        assert np.all(matrix[atoms, :] == 0)

    def test_detuning_without_coupling_is_large_kappa(self):
        """Test beta = 0 turns the large-detuning model into the large-kappa one."""
        params = ChainParams(5, beta=0.0, kappa=1e-3, delta=1.0)
        assert classify_regime(params) is Regime.LARGE_DETUNING
        detuned = effective_hamiltonian(params).matrix
        photon_only = effective_hamiltonian(params, Regime.LARGE_KAPPA).matrix
        assert np.array_equal(detuned, photon_only)

    def test_detuning_coefficients(self):
        """Test the three large-detuning coefficients on one bond."""
        params = ChainParams(2, beta=1.0, kappa=3.0, delta=400.0)
        matrix = effective_hamiltonian(params).matrix
        denominator = 400.0**2 + 4.0
        p1, a1 = basis_index(1, Mode.PHOTONIC, 2), basis_index(1, Mode.ATOMIC, 2)
        p2, a2 = basis_index(2, Mode.PHOTONIC, 2), basis_index(2, Mode.ATOMIC, 2)
        assert matrix[p1, p2] == pytest.approx(-3.0 * (1 - 2 / denominator))
        assert matrix[a1, a2] == pytest.approx(-3.0 * 2 / denominator)
        assert matrix[p1, a2] == pytest.approx(-3.0 * 400.0 / denominator)
        assert matrix[p1, a1] == 0.0

    def test_without_x_term(self):
        """Test include_x_term=False drops the photon-atom bond coupling."""
        params = ChainParams(2, beta=1.0, kappa=3.0, delta=400.0)
        matrix = effective_hamiltonian(params, include_x_term=False).matrix
        assert matrix[basis_index(1, Mode.PHOTONIC, 2), basis_index(2, Mode.ATOMIC, 2)] == 0.0

    def test_intermediate_raises(self):
        """Test there is no effective model for intermediate params."""
        with pytest.raises(ValidationError, match="intermediate"):
            effective_hamiltonian(chain(1.0))

    def test_matches_full_at_large_detuning(self):
        """Test occupations agree within 5e-3 for t ≤ N/(2 kappa) at N = 50."""
        params = chain(1.0, 1e3, n=50)
        times = np.linspace(0.0, 25.0, 101)
        defect = fidelity_defect(params, initial_localized_superposition(50), times)
        assert defect < 5e-3


class TestFidelityMonotone:
    """Tests that effective models improve deeper in their regime."""

    def _defects(self, params_list, horizon):
        return [
            fidelity_defect(
                p,
                initial_localized_superposition(p.n_cavities),
                np.linspace(0.0, horizon(p), 41),
            )
            for p in params_list
        ]

    def test_small_kappa(self):
        """Test the defect falls as beta/kappa grows over two decades."""
        params = [chain(r) for r in (1e-2, 1e-3, 1e-4)]
        defects = self._defects(params, lambda p: p.n_cavities / (2 * p.kappa))
        assert defects[0] > defects[1] > defects[2]

    def test_large_kappa(self):
        """Test the defect falls as kappa/beta grows over two decades."""
        params = [chain(r) for r in (1e2, 1e3, 1e4)]
        defects = self._defects(params, lambda p: p.n_cavities / (2 * p.kappa))
        assert defects[0] > defects[1] > defects[2]

    def test_large_detuning(self):
        """Test the defect falls as delta/beta grows over two decades."""
        params = [chain(1.0, r) for r in (1e2, 1e3, 1e4)]
        defects = self._defects(params, lambda p: p.n_cavities / (2 * p.kappa))
        assert defects[0] > defects[1] > defects[2]

    def test_large_detuning_first_order(self):
        """Test doubling delta halves the defect from an equal superposition start."""
        params = [chain(1.0, r) for r in (200.0, 400.0, 800.0)]
        defects = self._defects(params, lambda p: p.n_cavities / (2 * p.kappa))
        assert 1.5 <= defects[0] / defects[1] <= 2.5
        assert 1.5 <= defects[1] / defects[2] <= 2.5


class TestXTerm:
    """Tests for the photon-atom bond term."""

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_commutator_identity(self, n):
        """Test [X_{j,j+1}, X_{j+1,j+2}] is the next-nearest-neighbour hop."""
        assert x_term_commutator_check(n) < 1e-13

    def test_disjoint_bonds_commute(self):
        """Test X_{1,2} and X_{3,4} commute exactly."""
        left, right = x_term_matrix(5, 1), x_term_matrix(5, 3)
        assert np.array_equal(left @ right, right @ left)

    def test_reversed_order_flips_sign(self):
        """Test [X_{j+1,j+2}, X_{j,j+1}] is minus the hop."""
        left, right = x_term_matrix(4, 1), x_term_matrix(4, 2)
        assert np.array_equal(right @ left - left @ right, -nnn_hop_matrix(4, 1))

    def test_x_term_symmetric(self):
        """Test X_{j,j+1} is a real symmetric matrix."""
        matrix = x_term_matrix(6, 2)
        assert np.array_equal(matrix, matrix.T)
        assert matrix.sum() == 4.0

    def test_short_chain(self):
        """Test the check needs three sites."""
        with pytest.raises(ValidationError, match="n ≥ 3"):
            x_term_commutator_check(2)

    def test_bond_range(self):
        """Test out-of-range bonds are refused."""
        with pytest.raises(ValidationError):
            x_term_matrix(4, 4)

    def test_defect_scales_inverse_square(self):
        """Test doubling delta cuts the X-term defect about four times."""
        n = 20
        amps = np.zeros(2 * n)
        amps[basis_index(10, Mode.ATOMIC, n)] = 1.0
        state = SingleExcitationState(amps)
        times = np.linspace(0.0, n / 2, 101)
        near = x_term_defect(chain(1.0, 200.0, n), state, times)
        far = x_term_defect(chain(1.0, 400.0, n), state, times)
        assert 3.0 <= near / far <= 5.0


class TestRegimeConsistency:
    """Tests that measured speeds follow the predicted ones."""

    @pytest.mark.parametrize("kappa_over_beta", [1e-3, 1e3])
    def test_zero_detuning(self, kappa_over_beta):
        """Test both modes at kappa/beta = 1e-3 and the photon at 1e3."""
        n = 60
        params = chain(kappa_over_beta, n=n)
        prediction = predicted_speeds(params)
        j = prediction.j_photonic
        times = np.linspace(0.0, 0.5 * n / j, 201)
        trajectory = evolve_series(initial_localized_superposition(n), jch_spectrum(params), times)
        window = (0.1 * n / j, 0.4 * n / j)
        assert measure_speed(trajectory, Mode.PHOTONIC, window).speed == pytest.approx(j, rel=0.1)
        if prediction.j_atomic > 0:
            atomic = measure_speed(trajectory, Mode.ATOMIC, window).speed
            assert atomic == pytest.approx(prediction.j_atomic, rel=0.1)

    def test_large_detuning_photon(self):
        """Test the photon speed at delta/beta = 1e3, kappa = beta."""
        n = 60
        params = chain(1.0, 1e3, n=n)
        j = predicted_speeds(params).j_photonic
        times = np.linspace(0.0, 0.5 * n / j, 201)
        trajectory = evolve_series(initial_localized_superposition(n), jch_spectrum(params), times)
        speed = measure_speed(trajectory, Mode.PHOTONIC, (0.1 * n / j, 0.4 * n / j)).speed
        assert speed == pytest.approx(j, rel=0.1)

    def test_large_detuning_atom(self):
        """Test the atom speed on its own slow time scale."""
        n = 40
        params = chain(1.0, 1e3, n=n)
        j = predicted_speeds(params).j_atomic
        times = np.linspace(0.0, 0.5 * n / j, 201)
        trajectory = evolve_series(initial_localized_superposition(n), jch_spectrum(params), times)
        speed = measure_speed(trajectory, Mode.ATOMIC, (0.1 * n / j, 0.4 * n / j)).speed
        assert speed == pytest.approx(j, rel=0.25)


class TestEffectiveSpectrum:
    """Tests for the spectrum of the effective models."""

    def test_small_kappa_spectrum(self):
        """Test the small-kappa model has eigenvalues -(kappa/2) lambda, twice each."""
        params = chain(1e-3, n=7)
        eigenvalues = np.linalg.eigvalsh(effective_hamiltonian(params).matrix)
        expected = np.sort(np.repeat(-(1e-3 / 2) * uniform_adjacency_eigs(7).eigenvalues, 2))
        assert np.allclose(eigenvalues, expected, atol=1e-15)
