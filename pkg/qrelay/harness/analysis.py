"""Closed forms, blend calibration and the latency model."""
import logging
import math
from typing import Dict

from pydantic import BaseModel

from ..errors import ConfigError
from ..noise.channels import CoherenceSpec, dephasing_channel, werner_pair
from ..quantum.measurement import OPTIMAL_CHSH_ANGLES, chsh_value
from ..quantum.state import apply_channel
from ..validation import validate_non_negative, validate_probability
from .models import DEFAULT_ANCHOR_FIDELITY, DEFAULT_ANCHOR_X, ExperimentConfig, LatencyParams


def haar_fidelity(x_eff: float) -> float:
    """Haar-averaged decode fidelity with Werner keys.

    Each key pair flips its mask with probability x_eff/2, so the message sees
    independent X and Z errors; a non-trivial Pauli leaves average fidelity 1/3.
    """
    x_eff = validate_probability(x_eff, "x_eff")
    clean = (1.0 - x_eff / 2.0) ** 2
    return (1.0 + 2.0 * clean) / 3.0


def invert_haar_fidelity(target: float) -> float:
    if not 1.0 / 3.0 < target <= 1.0:
        raise ConfigError(f"anchor fidelity {target} outside the invertible range (1/3, 1]")
    return 2.0 * (1.0 - math.sqrt((3.0 * target - 1.0) / 2.0))


def calibrate_blend(anchor_x: float = DEFAULT_ANCHOR_X, anchor_fidelity: float = DEFAULT_ANCHOR_FIDELITY) -> float:
    """Fraction beta of the degradation axis that acts as undetected Werner mixing.

    Photon loss is post-selected away and plays no part here.
    """
    if not 0.0 < anchor_x <= 1.0:
        raise ConfigError(f"anchor_x must be in (0, 1], got {anchor_x}")
    x_eff = invert_haar_fidelity(anchor_fidelity)
    if x_eff > 1.0:
        raise ConfigError(f"anchor fidelity {anchor_fidelity} needs x_eff={x_eff:.4f}, outside [0, 1]")
    beta = x_eff / anchor_x
    if beta > 1.0:
        raise ConfigError(f"anchor ({anchor_x}, {anchor_fidelity}) needs beta={beta:.4f} > 1")
    logging.info(
        "calibrated_blend anchor_x=%.4f anchor_fidelity=%.4f x_eff=%.6f beta=%.6f", anchor_x, anchor_fidelity, x_eff, beta
    )
    return beta


def resolve_beta(cfg: ExperimentConfig) -> float:
    if cfg.blend_beta == "auto":
        return calibrate_blend(cfg.anchor_x, cfg.anchor_fidelity)
    return float(cfg.blend_beta)


class LatencyReport(BaseModel):
    proposed: float
    baseline: float
    reduction: float


def latency_compare(p: LatencyParams) -> LatencyReport:
    proposed = p.hops * p.per_hop_delay
    baseline = proposed + p.handshake_rounds * p.classical_rtt + p.reconciliation_time
    if baseline == 0:
        raise ValueError("baseline latency is zero; reduction is undefined")
    return LatencyReport(proposed=proposed, baseline=baseline, reduction=1.0 - proposed / baseline)


def aged_chsh_closed_form(x: float, elapsed: float, t2: float) -> float:
    """CHSH at the standard angles for a Werner pair whose qubits each dephased for ``elapsed``."""
    x = validate_probability(x, "x")
    elapsed = validate_non_negative(elapsed, "elapsed")
    gamma = math.exp(-elapsed / t2)
    return (1.0 - x) * math.sqrt(2.0) * (1.0 + gamma**2)


def chsh_check(x: float, elapsed: float = 0.0, t2: float = 10.0) -> Dict[str, float]:
    """Verification statistic of a stored link, numerically and in closed form."""
    try:
        x = validate_probability(x, "x")
        elapsed = validate_non_negative(elapsed, "elapsed")
        coh = CoherenceSpec(t2=t2)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    pair = werner_pair(x, ["alice.k1", "bob.k1"])
    channel = dephasing_channel(elapsed, coh)
    for label in pair.register:
        pair = apply_channel(pair, channel, [label])
    s = chsh_value(pair, OPTIMAL_CHSH_ANGLES)
    return {
        "x": x,
        "elapsed": elapsed,
        "t2": t2,
        "chsh": s,
        "closed_form": aged_chsh_closed_form(x, elapsed, t2),
        "violates_classical_bound": s > 2.0,
    }
