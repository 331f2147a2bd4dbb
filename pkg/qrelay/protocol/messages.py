from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..quantum.state import QuantumState
from ..quantum.states import pure_state

MESSAGE_LABEL = "msg.M"


class MessageKind(str, Enum):
    HAAR_RANDOM = "haar_random"
    FIXED_BASIS = "fixed_basis"
    FIXED = "fixed"


@dataclass(frozen=True, eq=False)
class MessageSpec:
    kind: MessageKind
    vector: np.ndarray
    bit: Optional[int] = None

    def __post_init__(self) -> None:
        vector = np.array(self.vector, dtype=complex).reshape(2)
        norm = np.linalg.norm(vector)
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"message vector must be normalized, got norm {norm}")
        vector.setflags(write=False)
        object.__setattr__(self, "vector", vector)

    @property
    def state(self) -> QuantumState:
        return pure_state(self.vector, [MESSAGE_LABEL])


def haar_message(rng: np.random.Generator) -> MessageSpec:
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return MessageSpec(MessageKind.HAAR_RANDOM, z / np.linalg.norm(z))


def basis_message(bit: int) -> MessageSpec:
    if bit not in (0, 1):
        raise ValueError(f"basis message bit must be 0 or 1, got {bit}")
    vector = np.zeros(2, dtype=complex)
    vector[bit] = 1.0
    return MessageSpec(MessageKind.FIXED_BASIS, vector, bit=bit)


def bloch_message(theta: float, phi: float) -> MessageSpec:
    return MessageSpec(MessageKind.FIXED, [np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def draw_message(
    kind: MessageKind | str,
    rng: np.random.Generator,
    bit: Optional[int] = None,
    theta: float = 0.0,
    phi: float = 0.0,
) -> MessageSpec:
    """Realize one message; fixed_basis draws a fair bit unless ``bit`` is given."""
    kind = MessageKind(kind)
    if kind == MessageKind.HAAR_RANDOM:
        return haar_message(rng)
    if kind == MessageKind.FIXED_BASIS:
        return basis_message(int(rng.integers(2)) if bit is None else bit)
    return bloch_message(theta, phi)
