"""Constructors for pure and entangled reference states."""
from enum import Enum
from typing import Sequence

import numpy as np

from ..validation import validate_labels
from .state import QuantumState, QubitLabel


class BellKind(str, Enum):
    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"


_BELL_VECTORS = {
    BellKind.PHI_PLUS: np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2),
    BellKind.PHI_MINUS: np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2),
    BellKind.PSI_PLUS: np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2),
    BellKind.PSI_MINUS: np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2),
}


def pure_state(vector: Sequence[complex], labels: Sequence[QubitLabel]) -> QuantumState:
    psi = np.asarray(vector, dtype=complex).reshape(-1)
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ValueError("state vector must be non-zero")
    psi = psi / norm
    return QuantumState(tuple(labels), np.outer(psi, psi.conj()))


def basis_state(bits: str, labels: Sequence[QubitLabel]) -> QuantumState:
    if len(bits) != len(labels) or set(bits) - {"0", "1"}:
        raise ValueError(f"bit string '{bits}' does not match {len(labels)} qubit(s)")
    dim = 2 ** len(labels)
    psi = np.zeros(dim, dtype=complex)
    psi[int(bits, 2) if bits else 0] = 1.0
    return pure_state(psi, labels)


def bloch_state(theta: float, phi: float, label: QubitLabel) -> QuantumState:
    return pure_state([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], [label])


def maximally_mixed(labels: Sequence[QubitLabel]) -> QuantumState:
    dim = 2 ** len(labels)
    return QuantumState(tuple(labels), np.eye(dim, dtype=complex) / dim)


def trivial_state() -> QuantumState:
    """The 1x1 state on an empty register; identity for tensor."""
    return QuantumState((), np.ones((1, 1), dtype=complex))


def bell_state(kind: BellKind | str, labels: Sequence[QubitLabel]) -> QuantumState:
    validate_labels(labels, min_count=2)
    if len(labels) != 2:
        raise ValueError(f"a Bell state needs exactly two labels, got {len(labels)}")
    return pure_state(_BELL_VECTORS[BellKind(kind)], labels)


def ghz_state(labels: Sequence[QubitLabel]) -> QuantumState:
    if len(labels) < 3:
        raise ValueError(f"GHZ state needs at least 3 qubits, got {len(labels)}")
    validate_labels(labels, min_count=3)
    psi = np.zeros(2 ** len(labels), dtype=complex)
    psi[0] = psi[-1] = 1 / np.sqrt(2)
    return pure_state(psi, labels)


def w_state(labels: Sequence[QubitLabel]) -> QuantumState:
    n = len(labels)
    if n < 3:
        raise ValueError(f"W state needs at least 3 qubits, got {n}")
    validate_labels(labels, min_count=3)
    psi = np.zeros(2 ** n, dtype=complex)
    for k in range(n):
        psi[1 << (n - 1 - k)] = 1 / np.sqrt(n)
    return pure_state(psi, labels)
