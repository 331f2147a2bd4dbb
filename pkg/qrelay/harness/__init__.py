"""Seeded Monte Carlo experiments, calibration and CSV output."""
from .analysis import (
    LatencyReport,
    aged_chsh_closed_form,
    calibrate_blend,
    chsh_check,
    haar_fidelity,
    invert_haar_fidelity,
    latency_compare,
    resolve_beta,
)
from .models import ExperimentConfig, LatencyParams, MetricsRecord, NodeSpec, TrialOutcome, load_config, make_config
from .output import CSV_COLUMNS, emit_csv, format_csv
from .runner import aggregate, run_adversary, run_sweep, run_trial

__all__ = [
    "CSV_COLUMNS", "ExperimentConfig", "LatencyParams", "LatencyReport", "MetricsRecord", "NodeSpec",
    "TrialOutcome", "aged_chsh_closed_form", "aggregate", "calibrate_blend", "chsh_check", "emit_csv",
    "format_csv", "haar_fidelity", "invert_haar_fidelity", "latency_compare", "load_config",
    "make_config", "resolve_beta", "run_adversary", "run_sweep", "run_trial",
]
