from typing import Sequence, Tuple

import numpy as np

from .gates import P0, P1, rotated_observable
from .state import QuantumState, QubitLabel, project

# Branches below this Born weight are treated as impossible.
PROBABILITY_FLOOR = 1e-12


def measure_z(state: QuantumState, target: QubitLabel, rng: np.random.Generator) -> Tuple[int, QuantumState, float]:
    """Projective Z measurement of ``target``; the target stays in the register, collapsed.

    Always consumes exactly one draw from ``rng``.
    """
    branch0 = project(state, P0, target)
    p0 = float(np.clip(np.real(np.trace(branch0)), 0.0, 1.0))
    draw = rng.random()
    if p0 <= PROBABILITY_FLOOR:
        outcome = 1
    elif 1.0 - p0 <= PROBABILITY_FLOOR:
        outcome = 0
    else:
        outcome = 0 if draw < p0 else 1
    if outcome == 0:
        collapsed, probability = branch0, p0
    else:
        collapsed, probability = project(state, P1, target), 1.0 - p0
    return outcome, QuantumState(state.register, collapsed / probability), probability


def correlator(state: QuantumState, a: float, b: float) -> float:
    """E(a, b) = Tr[rho (A(a) x A(b))], computed exactly."""
    if state.n_qubits != 2:
        raise ValueError(f"correlator needs a two-qubit state, got {state.n_qubits} qubit(s)")
    observable = np.kron(rotated_observable(a), rotated_observable(b))
    return float(np.real(np.trace(state.matrix @ observable)))


def chsh_value(state: QuantumState, angles: Sequence[float]) -> float:
    """S = E(a,b) - E(a,b') + E(a',b) + E(a',b') for angles (a, a', b, b')."""
    if state.n_qubits != 2:
        raise ValueError(f"CHSH needs a two-qubit state, got {state.n_qubits} qubit(s)")
    if len(angles) != 4:
        raise ValueError(f"CHSH needs four angles (a, a', b, b'), got {len(angles)}")
    a, a2, b, b2 = angles
    return (
        correlator(state, a, b)
        - correlator(state, a, b2)
        + correlator(state, a2, b)
        + correlator(state, a2, b2)
    )


OPTIMAL_CHSH_ANGLES = (0.0, np.pi / 2, np.pi / 4, 3 * np.pi / 4)
