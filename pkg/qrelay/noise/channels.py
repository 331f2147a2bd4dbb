"""Noise processes: Pauli depolarizing, Werner-degraded pairs, photonic erasure, memory dephasing."""
import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..quantum.gates import I2, X, Y, Z
from ..quantum.state import KrausChannel, QuantumState, QubitLabel
from ..quantum.states import bell_state
from ..validation import MAX_ATTENUATION_DB, validate_non_negative, validate_probability


class AttenuationSpec(BaseModel):
    """Optical attenuation of one hop, in dB."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    db: float = Field(ge=0.0, le=MAX_ATTENUATION_DB)


class CoherenceSpec(BaseModel):
    """Memory coherence parameters, in microseconds."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    t2: float = Field(default=10.0, gt=0.0)
    window: float = Field(default=3.0, gt=0.0)


def identity_channel() -> KrausChannel:
    return KrausChannel((I2,), name="identity")


def depolarizing_channel(p: float) -> KrausChannel:
    """Uniform Pauli twirl with weight p/4 per Pauli; p=1 maps every state to I/2."""
    p = validate_probability(p, "depolarizing p")
    if p == 0.0:
        return identity_channel()
    return KrausChannel(
        (
            math.sqrt(1 - 3 * p / 4) * I2,
            math.sqrt(p / 4) * X,
            math.sqrt(p / 4) * Y,
            math.sqrt(p / 4) * Z,
        ),
        name=f"depolarizing({p:g})",
    )


def dephasing_channel(elapsed: float, coh: CoherenceSpec) -> KrausChannel:
    """Phase damping with off-diagonal decay e^(-elapsed/t2)."""
    elapsed = validate_non_negative(elapsed, "elapsed time")
    if elapsed == 0.0:
        return identity_channel()
    gamma = math.exp(-elapsed / coh.t2)
    return KrausChannel(
        (math.sqrt((1 + gamma) / 2) * I2, math.sqrt((1 - gamma) / 2) * Z),
        name=f"dephasing({elapsed:g}us)",
    )


def werner_pair(x: float, labels: Sequence[QubitLabel]) -> QuantumState:
    """(1 - x)|phi+><phi+| + x I/4."""
    x = validate_probability(x, "werner degradation x")
    phi = bell_state("phi+", labels)
    return QuantumState(phi.register, (1 - x) * phi.matrix + x * np.eye(4, dtype=complex) / 4)


def survival_probability(att: AttenuationSpec) -> float:
    return 10.0 ** (-att.db / 10.0)


def attenuation_for_loss(loss: float) -> AttenuationSpec:
    """Per-hop attenuation that loses a photon with probability ``loss``."""
    loss = validate_probability(loss, "photon loss")
    if loss >= 1.0:
        return AttenuationSpec(db=MAX_ATTENUATION_DB)
    return AttenuationSpec(db=min(MAX_ATTENUATION_DB, -10.0 * math.log10(1.0 - loss)))


def sample_erasure(p_survive: float, rng: np.random.Generator) -> bool:
    """True when the photon survives; consumes exactly one draw."""
    p_survive = validate_probability(p_survive, "survival probability")
    return bool(rng.random() < p_survive)
