from typing import Sequence

MAX_QUBITS = 8
MAX_ATTENUATION_DB = 60.0


def validate_probability(value: float, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return value


def validate_non_negative(value: float, name: str) -> float:
    value = float(value)
    if value < 0.0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def validate_labels(labels: Sequence[str], *, min_count: int = 1) -> None:
    if len(labels) < min_count:
        raise ValueError(f"expected at least {min_count} qubit labels, got {len(labels)}")
    if len(labels) > MAX_QUBITS:
        raise ValueError(f"register of {len(labels)} qubits exceeds the {MAX_QUBITS}-qubit cap")
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label.strip():
            raise ValueError("qubit labels must be non-empty strings")
        if label in seen:
            raise ValueError(f"duplicate qubit label '{label}'")
        seen.add(label)
