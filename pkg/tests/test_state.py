import math
from functools import reduce

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrelay.noise.channels import depolarizing_channel, werner_pair
from qrelay.quantum.gates import CNOT, CZ, HADAMARD, I2, P0, P1, PAULI_X, X, Z
from qrelay.quantum.measurement import OPTIMAL_CHSH_ANGLES, chsh_value, correlator, measure_z
from qrelay.quantum.state import (
    KrausChannel,
    QuantumState,
    UnitaryOp,
    apply_channel,
    apply_unitary,
    fidelity,
    partial_trace,
    purity,
    tensor,
)
from qrelay.quantum.states import (
    basis_state,
    bell_state,
    bloch_state,
    ghz_state,
    maximally_mixed,
    pure_state,
    trivial_state,
    w_state,
)

LABELS = ["a", "b", "c"]


def _random_rho(seed: int, n: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    dim = 2**n
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def _embed(ops: dict, n: int) -> np.ndarray:
    """Kronecker product with ``ops[position]`` at each position and identity elsewhere."""
    return reduce(np.kron, [ops.get(i, I2) for i in range(n)])


class TestRegister:
    def test_position_zero_is_most_significant(self):
        s = basis_state("01", ["a", "b"])
        assert s.matrix[1, 1] == pytest.approx(1.0)

    def test_duplicate_label_rejected(self):
        with pytest.raises(ValueError, match="duplicate qubit label 'a'"):
            QuantumState(("a", "a"), np.eye(4) / 4)

    def test_register_cap(self):
        labels = [f"q{i}" for i in range(9)]
        with pytest.raises(ValueError, match="cap"):
            maximally_mixed(labels)

    def test_invalid_matrix_rejected(self):
        with pytest.raises(ValueError, match="trace"):
            QuantumState(("a",), np.eye(2))
        with pytest.raises(ValueError, match="positive semidefinite"):
            QuantumState(("a",), np.diag([1.5, -0.5]))
        with pytest.raises(ValueError, match="Hermitian"):
            QuantumState(("a",), np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_tensor_with_trivial_state_is_identity(self):
        s = bloch_state(0.3, 1.1, "a")
        out = tensor(trivial_state(), s)
        assert out.register == ("a",)
        np.testing.assert_allclose(out.matrix, s.matrix, atol=1e-12)

    def test_tensor_rejects_shared_label(self):
        with pytest.raises(ValueError, match="duplicate"):
            tensor(basis_state("0", ["a"]), basis_state("1", ["a"]))


class TestOperators:
    def test_non_unitary_rejected(self):
        with pytest.raises(ValueError, match="not unitary"):
            UnitaryOp(np.array([[1, 1], [0, 1]]), name="shear")

    def test_non_trace_preserving_channel_rejected(self):
        with pytest.raises(ValueError, match="trace-preserving"):
            KrausChannel((0.5 * I2,), name="leaky")

    def test_arity_mismatch(self):
        s = basis_state("00", ["a", "b"])
        with pytest.raises(ValueError, match="arity mismatch"):
            apply_unitary(s, CNOT, ["a"])

    def test_unknown_label(self):
        s = basis_state("00", ["a", "b"])
        with pytest.raises(ValueError, match="unknown qubit label 'z'"):
            apply_unitary(s, PAULI_X, ["z"])

    def test_hadamard_then_cnot_makes_bell(self):
        s = basis_state("00", ["a", "b"])
        s = apply_unitary(apply_unitary(s, HADAMARD, ["a"]), CNOT, ["a", "b"])
        assert fidelity(s, bell_state("phi+", ["a", "b"])) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("control,target", [(0, 2), (2, 0), (1, 2), (2, 1)])
    def test_cnot_matches_kronecker_oracle(self, control, target):
        rho = _random_rho(control * 3 + target, 3)
        s = QuantumState(tuple(LABELS), rho)
        out = apply_unitary(s, CNOT, [LABELS[control], LABELS[target]])
        full = _embed({control: P0}, 3) + _embed({control: P1, target: X}, 3)
        np.testing.assert_allclose(out.matrix, full @ rho @ full.conj().T, atol=1e-12)

    def test_cz_is_symmetric(self):
        s = QuantumState(("a", "b"), _random_rho(3, 2))
        np.testing.assert_allclose(
            apply_unitary(s, CZ, ["a", "b"]).matrix, apply_unitary(s, CZ, ["b", "a"]).matrix, atol=1e-12
        )

    def test_channel_matches_kraus_sum(self):
        rho = _random_rho(11, 2)
        s = QuantumState(("a", "b"), rho)
        ch = depolarizing_channel(0.3)
        out = apply_channel(s, ch, ["b"])
        expected = sum(_embed({1: k}, 2) @ rho @ _embed({1: k}, 2).conj().T for k in ch.operators)
        np.testing.assert_allclose(out.matrix, expected, atol=1e-12)


class TestPartialTrace:
    def test_bell_marginal_is_maximally_mixed(self):
        m = partial_trace(bell_state("psi-", ["a", "b"]), ["a"])
        np.testing.assert_allclose(m.matrix, np.eye(2) / 2, atol=1e-12)

    def test_keep_order_follows_argument(self):
        s = basis_state("01", ["a", "b"])
        swapped = partial_trace(s, ["b", "a"])
        assert swapped.register == ("b", "a")
        assert swapped.matrix[2, 2] == pytest.approx(1.0)

    def test_empty_keep_rejected(self):
        with pytest.raises(ValueError):
            partial_trace(basis_state("0", ["a"]), [])

    def test_w_state_marginal(self):
        n = 4
        m = partial_trace(w_state([f"q{i}" for i in range(n)]), ["q2"])
        np.testing.assert_allclose(np.diag(m.matrix).real, [(n - 1) / n, 1 / n], atol=1e-12)

    def test_ghz_marginal(self):
        m = partial_trace(ghz_state(["a", "b", "c"]), ["a", "c"])
        np.testing.assert_allclose(np.diag(m.matrix).real, [0.5, 0, 0, 0.5], atol=1e-12)
        assert purity(m) == pytest.approx(0.5)


class TestFidelity:
    def test_mixed_reference_rejected(self):
        with pytest.raises(ValueError, match="mixed"):
            fidelity(maximally_mixed(["a"]), maximally_mixed(["a"]))

    def test_maximally_mixed_against_any_pure_state(self):
        assert fidelity(maximally_mixed(["a"]), bloch_state(1.2, 0.4, "a")) == pytest.approx(0.5)

    def test_orthogonal_states(self):
        assert fidelity(basis_state("0", ["a"]), basis_state("1", ["a"])) == pytest.approx(0.0, abs=1e-12)


class TestMeasurement:
    def test_measure_z_collapses(self, rng):
        outcome, post, p = measure_z(basis_state("10", ["a", "b"]), "a", rng)
        assert outcome == 1
        assert p == pytest.approx(1.0)
        assert post.register == ("a", "b")

    def test_never_returns_impossible_branch(self):
        s = basis_state("0", ["a"])
        for seed in range(50):
            outcome, _, _ = measure_z(s, "a", np.random.default_rng(seed))
            assert outcome == 0

    def test_bell_outcomes_correlate(self, rng):
        s = bell_state("phi+", ["a", "b"])
        for _ in range(20):
            first, post, _ = measure_z(s, "a", rng)
            second, _, p = measure_z(post, "b", rng)
            assert first == second
            assert p == pytest.approx(1.0)

    def test_correlator_of_phi_plus(self):
        s = bell_state("phi+", ["a", "b"])
        assert correlator(s, 0.3, 0.3) == pytest.approx(1.0)
        assert correlator(s, 0.0, math.pi / 2) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("x", [round(0.1 * i, 1) for i in range(11)])
    def test_chsh_of_werner_pair(self, x):
        s = werner_pair(x, ["a", "b"])
        assert chsh_value(s, OPTIMAL_CHSH_ANGLES) == pytest.approx((1 - x) * 2 * math.sqrt(2), abs=1e-6)

    def test_classical_bound_crossing(self):
        x_star = 1 - 1 / math.sqrt(2)
        assert chsh_value(werner_pair(x_star, ["a", "b"]), OPTIMAL_CHSH_ANGLES) == pytest.approx(2.0, abs=1e-6)
        assert chsh_value(werner_pair(x_star - 1e-3, ["a", "b"]), OPTIMAL_CHSH_ANGLES) > 2.0
        assert chsh_value(werner_pair(x_star + 1e-3, ["a", "b"]), OPTIMAL_CHSH_ANGLES) < 2.0

    def test_chsh_needs_two_qubits(self):
        with pytest.raises(ValueError):
            chsh_value(ghz_state(["a", "b", "c"]), OPTIMAL_CHSH_ANGLES)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 3))
def test_unitaries_preserve_trace_and_purity(seed, n):
    labels = [f"q{i}" for i in range(n)]
    s = QuantumState(tuple(labels), _random_rho(seed, n))
    out = apply_unitary(s, HADAMARD, [labels[-1]])
    assert np.trace(out.matrix).real == pytest.approx(1.0, abs=1e-10)
    assert purity(out) == pytest.approx(purity(s), abs=1e-10)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), p=st.floats(0.0, 1.0))
def test_partial_trace_commutes_with_local_channels(seed, p):
    s = QuantumState(("a", "b"), _random_rho(seed, 2))
    ch = depolarizing_channel(p)
    left = partial_trace(apply_channel(s, ch, ["b"]), ["a"])
    right = partial_trace(s, ["a"])
    np.testing.assert_allclose(left.matrix, right.matrix, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(theta=st.floats(0.0, math.pi), phi=st.floats(0.0, 2 * math.pi))
def test_pure_state_fidelity_with_itself(theta, phi):
    s = bloch_state(theta, phi, "a")
    assert fidelity(s, s) == pytest.approx(1.0, abs=1e-10)
    flipped = apply_unitary(s, UnitaryOp(Z, "Z"), ["a"])
    assert fidelity(flipped, s) == pytest.approx(math.cos(theta) ** 2, abs=1e-10)


class TestConstructors:
    def test_psi_plus_entries(self):
        m = bell_state("psi+", ["a", "b"]).matrix
        expected = np.zeros((4, 4))
        expected[1:3, 1:3] = 0.5
        np.testing.assert_allclose(m, expected, atol=1e-12)

    def test_ghz_amplitudes(self):
        m = ghz_state(["a", "b", "c"]).matrix
        expected = np.zeros((8, 8))
        expected[np.ix_([0, 7], [0, 7])] = 0.5
        np.testing.assert_allclose(m, expected, atol=1e-12)

    def test_w_amplitudes(self):
        m = w_state(["a", "b", "c"]).matrix
        expected = np.zeros((8, 8))
        # |001>, |010>, |100>
        expected[np.ix_([1, 2, 4], [1, 2, 4])] = 1 / 3
        np.testing.assert_allclose(m, expected, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 2), m=st.integers(1, 2))
def test_partial_trace_undoes_tensor(seed, n, m):
    left = QuantumState(tuple(f"l{i}" for i in range(n)), _random_rho(seed, n))
    right = QuantumState(tuple(f"r{i}" for i in range(m)), _random_rho(seed + 1, m))
    joint = tensor(left, right)
    np.testing.assert_allclose(partial_trace(joint, left.register).matrix, left.matrix, atol=1e-12)
    assert purity(joint) == pytest.approx(purity(left) * purity(right), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_cnot_is_an_involution(seed):
    s = QuantumState(("a", "b", "c"), _random_rho(seed, 3))
    twice = apply_unitary(apply_unitary(s, CNOT, ["c", "a"]), CNOT, ["c", "a"])
    np.testing.assert_allclose(twice.matrix, s.matrix, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 3))
def test_fidelity_is_overlap_with_reference(seed, n):
    labels = tuple(f"q{i}" for i in range(n))
    rho = _random_rho(seed, n)
    rng = np.random.default_rng(seed)
    psi = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    psi /= np.linalg.norm(psi)
    expected = np.trace(rho @ np.outer(psi, psi.conj())).real
    assert fidelity(QuantumState(labels, rho), pure_state(psi, labels)) == pytest.approx(expected, abs=1e-10)
