from typing import Any, Dict, Optional

from ..errors import ConfigError
from ..protocol.adversary import AdversaryStrategy
from .analysis import calibrate_blend, chsh_check, invert_haar_fidelity, latency_compare, resolve_beta
from .models import DEFAULT_ANCHOR_FIDELITY, DEFAULT_ANCHOR_X, LatencyParams, make_config
from .output import format_csv
from .runner import run_adversary, run_sweep


def _split_workers(params: Dict[str, Any]) -> tuple[Dict[str, Any], Optional[int]]:
    args = dict(params)
    workers = args.pop("workers", None)
    if workers is not None and int(workers) < 1:
        raise ConfigError("workers must be a positive integer")
    return args, int(workers) if workers is not None else None


def tool_run_sweep(params: Dict[str, Any]) -> Dict[str, Any]:
    args, workers = _split_workers(params)
    cfg = make_config(args)
    records = run_sweep(cfg, workers)
    return {
        "beta": resolve_beta(cfg),
        "records": [r.model_dump() for r in records],
        "csv": format_csv(records),
    }


def tool_run_adversary(params: Dict[str, Any]) -> Dict[str, Any]:
    args, workers = _split_workers(params)
    try:
        strategy = AdversaryStrategy(args.pop("strategy", AdversaryStrategy.TRACE_OUT.value))
    except ValueError as e:
        raise ConfigError(str(e)) from None
    cfg = make_config(args)
    record = run_adversary(cfg, strategy, workers)
    return {"strategy": strategy.value, "record": record.model_dump(), "csv": format_csv([record])}


def tool_latency_compare(params: Dict[str, Any]) -> Dict[str, Any]:
    try:
        p = LatencyParams(**params)
    except ValueError as e:
        raise ConfigError(str(e)) from None
    return latency_compare(p).model_dump()


def tool_calibrate_blend(params: Dict[str, Any]) -> Dict[str, Any]:
    try:
        anchor_x = float(params.get("anchor_x", DEFAULT_ANCHOR_X))
        anchor_fidelity = float(params.get("anchor_fidelity", DEFAULT_ANCHOR_FIDELITY))
    except (TypeError, ValueError):
        raise ConfigError("anchor_x and anchor_fidelity must be numbers") from None
    beta = calibrate_blend(anchor_x, anchor_fidelity)
    return {"anchor_x": anchor_x, "anchor_fidelity": anchor_fidelity, "x_eff": invert_haar_fidelity(anchor_fidelity), "beta": beta}


def tool_chsh_check(params: Dict[str, Any]) -> Dict[str, Any]:
    if "x" not in params:
        raise ConfigError("x is required")
    try:
        x, elapsed, t2 = float(params["x"]), float(params.get("elapsed", 0.0)), float(params.get("t2", 10.0))
    except (TypeError, ValueError):
        raise ConfigError("x, elapsed and t2 must be numbers") from None
    return chsh_check(x, elapsed, t2)
