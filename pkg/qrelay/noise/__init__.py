"""Noise models."""
from .channels import (
    AttenuationSpec,
    CoherenceSpec,
    attenuation_for_loss,
    dephasing_channel,
    depolarizing_channel,
    identity_channel,
    sample_erasure,
    survival_probability,
    werner_pair,
)

__all__ = [
    "AttenuationSpec", "CoherenceSpec", "attenuation_for_loss", "dephasing_channel",
    "depolarizing_channel", "identity_channel", "sample_erasure", "survival_probability", "werner_pair",
]
