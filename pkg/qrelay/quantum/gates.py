import numpy as np

from .state import UnitaryOp

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

P0 = np.array([[1, 0], [0, 0]], dtype=complex)
P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def controlled(u: np.ndarray) -> np.ndarray:
    """Two-qubit controlled-u with the control on the first target."""
    return np.kron(P0, I2) + np.kron(P1, u)


PAULI_X = UnitaryOp(X, name="X")
HADAMARD = UnitaryOp(H, name="H")
CNOT = UnitaryOp(controlled(X), name="CNOT")
CZ = UnitaryOp(controlled(Z), name="CZ")


def rotated_observable(theta: float) -> np.ndarray:
    """Spin observable in the X-Z plane: cos(theta) Z + sin(theta) X."""
    return np.cos(theta) * Z + np.sin(theta) * X
