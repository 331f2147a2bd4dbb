from typing import Any, Dict

from .harness.tools import (
    tool_calibrate_blend,
    tool_chsh_check,
    tool_latency_compare,
    tool_run_adversary,
    tool_run_sweep,
)

_EXPERIMENT_PROPERTIES: Dict[str, Any] = {
    "seed": {"type": "integer", "minimum": 0},
    "trials": {"type": "integer", "minimum": 1, "default": 1000},
    "nodes": {
        "type": "array",
        "items": {
            "type": "object",
            "properties": {"id": {"type": "string"}, "role": {"type": "string", "enum": ["sender", "receiver", "relay", "adversary"]}},
            "required": ["id", "role"],
        },
    },
    "message_path": {"type": "array", "items": {"type": "string"}},
    "hop_db": {"oneOf": [{"type": "number"}, {"type": "array", "items": {"type": "number"}}]},
    "degradation_sweep": {"type": "array", "items": {"type": "number"}},
    "herald_loss": {"type": "number", "default": 0.0},
    "blend_beta": {"oneOf": [{"type": "number"}, {"type": "string", "enum": ["auto"]}], "default": "auto"},
    "anchor_x": {"type": "number", "default": 0.25},
    "anchor_fidelity": {"type": "number", "default": 0.972},
    "message_kind": {"type": "string", "enum": ["haar_random", "fixed_basis", "fixed"]},
    "message_bit": {"type": "integer", "enum": [0, 1]},
    "message_theta": {"type": "number"},
    "message_phi": {"type": "number"},
    "coherence": {"type": "object", "properties": {"t2": {"type": "number"}, "window": {"type": "number"}}},
    "bob_delay": {"type": "number", "default": 0.0},
    "hop_depolarizing": {"type": "number", "default": 0.0},
    "adversary_degradation": {"type": "number", "default": 0.0},
    "workers": {"type": "integer", "minimum": 1, "description": "Worker processes; output does not depend on it"},
}

_LATENCY_PROPERTIES: Dict[str, Any] = {
    "hops": {"type": "integer", "minimum": 1, "default": 4},
    "per_hop_delay": {"type": "number", "default": 1.0},
    "classical_rtt": {"type": "number", "default": 1.0},
    "handshake_rounds": {"type": "integer", "default": 2},
    "reconciliation_time": {"type": "number", "default": 0.3},
}


TOOLS: Dict[str, Dict[str, Any]] = {
    "run_sweep": {
        "description": (
            "Run the degradation sweep: for each x, seeded Monte Carlo trials through distribute, encode, "
            "relay and decode. Returns one metrics record per x and the same data as CSV."
        ),
        "parameters": {"type": "object", "properties": _EXPERIMENT_PROPERTIES, "required": ["seed"]},
        "handler": lambda params: tool_run_sweep(params),
    },
    "run_adversary": {
        "description": (
            "Intercept every delivered payload with an adversary that knows the circuit but holds no key qubits. "
            "Reports adversary fidelity, the authorized fidelity on the same trials and, for fixed_basis "
            "messages, the bit-guess rate."
        ),
        "parameters": {
            "type": "object",
            "properties": {
                **_EXPERIMENT_PROPERTIES,
                "strategy": {"type": "string", "enum": ["trace_out", "fresh_pairs", "collusion"], "default": "trace_out"},
            },
            "required": ["seed"],
        },
        "handler": lambda params: tool_run_adversary(params),
    },
    "latency_compare": {
        "description": "Modeled end-to-end latency of the relay against a handshake-and-reconciliation baseline",
        "parameters": {"type": "object", "properties": _LATENCY_PROPERTIES},
        "handler": lambda params: tool_latency_compare(params),
    },
    "calibrate_blend": {
        "description": "Fraction of the degradation axis acting as undetected Werner mixing, fixed by an anchor point",
        "parameters": {
            "type": "object",
            "properties": {
                "anchor_x": {"type": "number", "default": 0.25},
                "anchor_fidelity": {"type": "number", "default": 0.972},
            },
        },
        "handler": lambda params: tool_calibrate_blend(params),
    },
    "chsh_check": {
        "description": "CHSH value of a stored Werner pair after dephasing for `elapsed` microseconds",
        "parameters": {
            "type": "object",
            "properties": {
                "x": {"type": "number"},
                "elapsed": {"type": "number", "default": 0.0},
                "t2": {"type": "number", "default": 10.0},
            },
            "required": ["x"],
        },
        "handler": lambda params: tool_chsh_check(params),
    },
}
