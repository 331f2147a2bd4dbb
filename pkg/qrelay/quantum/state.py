"""Labeled multi-qubit density matrices and the linear maps acting on them.

Qubit position is insertion order in the register; position 0 is the most
significant bit of a basis index, so ``|01>`` means first qubit 0, second 1.
All embeddings are computed from the label -> position lookup.
"""
import string
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from .. import config
from ..validation import validate_labels

QubitLabel = str

STRUCTURE_ATOL = 1e-10
PURITY_ATOL = 1e-9


def check_state(register: Sequence[QubitLabel], matrix: np.ndarray) -> None:
    """Raise ValueError unless ``matrix`` is Hermitian, unit-trace and PSD."""
    hermitian_err = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if hermitian_err > STRUCTURE_ATOL:
        raise ValueError(f"state on {list(register)} is not Hermitian (max deviation {hermitian_err:.3e})")
    trace = complex(np.trace(matrix))
    if abs(trace - 1.0) > STRUCTURE_ATOL:
        raise ValueError(f"state on {list(register)} has trace {trace.real:.12f}, expected 1")
    min_eig = float(np.min(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)))
    if min_eig < -STRUCTURE_ATOL:
        raise ValueError(f"state on {list(register)} is not positive semidefinite (min eigenvalue {min_eig:.3e})")


@dataclass(frozen=True, eq=False)
class QuantumState:
    register: Tuple[QubitLabel, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        register = tuple(self.register)
        validate_labels(register, min_count=0)
        matrix = np.array(self.matrix, dtype=complex)
        dim = 2 ** len(register)
        if matrix.shape != (dim, dim):
            raise ValueError(f"matrix shape {matrix.shape} does not match a {len(register)}-qubit register")
        matrix.setflags(write=False)
        object.__setattr__(self, "register", register)
        object.__setattr__(self, "matrix", matrix)
        if config.STRICT_CHECKS:
            check_state(register, matrix)

    @property
    def n_qubits(self) -> int:
        return len(self.register)

    @property
    def dim(self) -> int:
        return 2 ** len(self.register)

    def position(self, label: QubitLabel) -> int:
        try:
            return self.register.index(label)
        except ValueError:
            raise ValueError(f"unknown qubit label '{label}' (register {list(self.register)})") from None


@dataclass(frozen=True, eq=False)
class UnitaryOp:
    matrix: np.ndarray
    name: str = "U"

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex)
        arity = _arity_of(matrix, self.name)
        if not np.allclose(matrix.conj().T @ matrix, np.eye(2 ** arity), rtol=0.0, atol=STRUCTURE_ATOL):
            raise ValueError(f"operator '{self.name}' is not unitary")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def arity(self) -> int:
        return int(np.log2(self.matrix.shape[0]))


@dataclass(frozen=True, eq=False)
class KrausChannel:
    operators: Tuple[np.ndarray, ...]
    name: str = "channel"

    def __post_init__(self) -> None:
        if not self.operators:
            raise ValueError(f"channel '{self.name}' has no Kraus operators")
        ops = tuple(np.array(k, dtype=complex) for k in self.operators)
        arity = _arity_of(ops[0], self.name)
        for k in ops:
            if k.shape != ops[0].shape:
                raise ValueError(f"channel '{self.name}' mixes Kraus operators of different shapes")
            k.setflags(write=False)
        completeness = sum(k.conj().T @ k for k in ops)
        if not np.allclose(completeness, np.eye(2 ** arity), rtol=0.0, atol=STRUCTURE_ATOL):
            raise ValueError(f"channel '{self.name}' is not trace-preserving")
        object.__setattr__(self, "operators", ops)

    @property
    def arity(self) -> int:
        return int(np.log2(self.operators[0].shape[0]))


def _arity_of(matrix: np.ndarray, name: str) -> int:
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"operator '{name}' must be a square matrix, got shape {matrix.shape}")
    arity = int(round(np.log2(matrix.shape[0]))) if matrix.shape[0] else 0
    if arity < 1 or 2 ** arity != matrix.shape[0]:
        raise ValueError(f"operator '{name}' dimension {matrix.shape[0]} is not a power of two")
    return arity


def _target_positions(state: QuantumState, targets: Sequence[QubitLabel], arity: int | None = None) -> List[int]:
    targets = list(targets)
    if arity is not None and len(targets) != arity:
        raise ValueError(f"arity mismatch: operator acts on {arity} qubit(s), got targets {targets}")
    if len(set(targets)) != len(targets):
        raise ValueError(f"targets must be distinct, got {targets}")
    return [state.position(label) for label in targets]


def _contract(tensor: np.ndarray, op: np.ndarray, axes: Sequence[int]) -> np.ndarray:
    k = len(axes)
    op_t = op.reshape((2,) * (2 * k))
    out = np.tensordot(op_t, tensor, axes=(list(range(k, 2 * k)), list(axes)))
    return np.moveaxis(out, list(range(k)), list(axes))


def _sandwich(matrix: np.ndarray, op: np.ndarray, positions: Sequence[int], n: int) -> np.ndarray:
    """Return (op on positions) . matrix . (op on positions)^dagger."""
    tensor = matrix.reshape((2,) * (2 * n))
    tensor = _contract(tensor, op, positions)
    tensor = _contract(tensor, op.conj(), [n + p for p in positions])
    return tensor.reshape(2 ** n, 2 ** n)


def tensor(a: QuantumState, b: QuantumState) -> QuantumState:
    overlap = [label for label in b.register if label in a.register]
    if overlap:
        raise ValueError(f"duplicate qubit label '{overlap[0]}' in tensor product")
    return QuantumState(a.register + b.register, np.kron(a.matrix, b.matrix))


def apply_unitary(state: QuantumState, u: UnitaryOp, targets: Sequence[QubitLabel]) -> QuantumState:
    positions = _target_positions(state, targets, u.arity)
    return QuantumState(state.register, _sandwich(state.matrix, u.matrix, positions, state.n_qubits))


def apply_channel(state: QuantumState, ch: KrausChannel, targets: Sequence[QubitLabel]) -> QuantumState:
    positions = _target_positions(state, targets, ch.arity)
    out = np.zeros_like(state.matrix)
    for k in ch.operators:
        out = out + _sandwich(state.matrix, k, positions, state.n_qubits)
    return QuantumState(state.register, out)


def project(state: QuantumState, operator: np.ndarray, target: QubitLabel) -> np.ndarray:
    """Unnormalized P rho P^dagger for a single-qubit operator; no invariant checks."""
    positions = _target_positions(state, [target], 1)
    return _sandwich(state.matrix, np.asarray(operator, dtype=complex), positions, state.n_qubits)


def partial_trace(state: QuantumState, keep: Sequence[QubitLabel]) -> QuantumState:
    keep = list(keep)
    if not keep:
        raise ValueError("partial_trace needs a non-empty keep set")
    positions = _target_positions(state, keep)
    n = state.n_qubits
    letters = string.ascii_letters
    rows = [letters[i] for i in range(n)]
    cols = [letters[n + i] for i in range(n)]
    for i in range(n):
        if i not in positions:
            cols[i] = rows[i]
    subscripts = (
        "".join(rows) + "".join(cols) + "->"
        + "".join(rows[p] for p in positions) + "".join(cols[p] for p in positions)
    )
    reduced = np.einsum(subscripts, state.matrix.reshape((2,) * (2 * n)))
    d = 2 ** len(keep)
    return QuantumState(tuple(keep), reduced.reshape(d, d))


def purity(state: QuantumState) -> float:
    return float(np.real(np.trace(state.matrix @ state.matrix)))


def reference_vector(reference: QuantumState) -> np.ndarray:
    """Pure-state vector of ``reference`` (global phase arbitrary)."""
    if abs(purity(reference) - 1.0) > PURITY_ATOL:
        raise ValueError(f"reference state on {list(reference.register)} is mixed (purity {purity(reference):.6f})")
    _, vectors = np.linalg.eigh(reference.matrix)
    return vectors[:, -1]


def fidelity(state: QuantumState, reference: QuantumState) -> float:
    if state.dim != reference.dim:
        raise ValueError(f"dimension mismatch: {state.dim} vs {reference.dim}")
    psi = reference_vector(reference)
    value = float(np.real(psi.conj() @ state.matrix @ psi))
    return min(1.0, max(0.0, value))
