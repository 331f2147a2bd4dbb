"""Exact mixed-state simulation engine."""
from .gates import CNOT, CZ, HADAMARD, PAULI_X
from .measurement import OPTIMAL_CHSH_ANGLES, chsh_value, correlator, measure_z
from .state import (
    KrausChannel,
    QuantumState,
    QubitLabel,
    UnitaryOp,
    apply_channel,
    apply_unitary,
    fidelity,
    partial_trace,
    purity,
    tensor,
)
from .states import (
    BellKind,
    basis_state,
    bell_state,
    bloch_state,
    ghz_state,
    maximally_mixed,
    pure_state,
    trivial_state,
    w_state,
)

__all__ = [
    "BellKind", "CNOT", "CZ", "HADAMARD", "KrausChannel", "OPTIMAL_CHSH_ANGLES",
    "PAULI_X", "QuantumState", "QubitLabel", "UnitaryOp",
    "apply_channel", "apply_unitary", "basis_state", "bell_state", "bloch_state", "chsh_value",
    "correlator", "fidelity", "ghz_state", "maximally_mixed", "measure_z", "partial_trace",
    "pure_state", "purity", "tensor", "trivial_state", "w_state",
]
