"""Interceptors that know the full circuit but hold none of Bob's key qubits."""
from enum import Enum
from typing import Optional, Sequence, Set

import numpy as np

from ..network.links import pair_label
from ..network.topology import NodeRole, Topology
from ..quantum.measurement import measure_z
from ..quantum.state import QuantumState, fidelity, partial_trace, tensor
from ..quantum.states import bell_state
from .messages import MESSAGE_LABEL, MessageSpec
from .relay import DecodeResult, DecodeStatus, EncodedPayload, unmask

EVE = "eve"


class AdversaryStrategy(str, Enum):
    TRACE_OUT = "trace_out"
    FRESH_PAIRS = "fresh_pairs"
    COLLUSION = "collusion"


def _intercepted(payload: EncodedPayload) -> QuantumState:
    # everything an off-path party can hold is the message qubit
    return partial_trace(payload.state, [MESSAGE_LABEL])


def _impersonate(view: QuantumState) -> QuantumState:
    """Substitute pristine pairs for the missing keys and run Bob's circuit with them."""
    state = view
    for slot in (1, 2):
        state = tensor(state, bell_state("phi+", [pair_label(EVE, slot), pair_label(f"{EVE}-decoder", slot)]))
    state = unmask(state, pair_label(f"{EVE}-decoder", 1), pair_label(f"{EVE}-decoder", 2))
    return partial_trace(state, [MESSAGE_LABEL])


def _pool(payload: EncodedPayload, colluders: Sequence[str], topo: Optional[Topology]) -> QuantumState:
    """Joint view of colluding relays: the forwarded photon plus any key qubits they hold."""
    held: Set[str] = set()
    for node_id in colluders:
        if topo is None:
            continue
        node = topo.node(node_id)
        if node.role != NodeRole.RELAY:
            raise ValueError(f"colluder '{node_id}' is not a relay")
        held |= node.held_qubits
    pooled = partial_trace(payload.state, [MESSAGE_LABEL, *(q for q in payload.state.register if q in held)])
    return partial_trace(pooled, [MESSAGE_LABEL])


def adversary_decode(
    payload: EncodedPayload,
    strategy: AdversaryStrategy | str,
    rng: np.random.Generator,
    msg: MessageSpec,
    colluders: Sequence[str] = (),
    topo: Optional[Topology] = None,
) -> DecodeResult:
    """Best-effort reconstruction without Bob's halves, followed by a Z readout guess."""
    if payload.erased:
        raise ValueError("nothing to intercept: payload was erased")
    strategy = AdversaryStrategy(strategy)
    if strategy == AdversaryStrategy.TRACE_OUT:
        reconstructed = _intercepted(payload)
    elif strategy == AdversaryStrategy.FRESH_PAIRS:
        reconstructed = _impersonate(_intercepted(payload))
    else:
        reconstructed = _pool(payload, colluders or (topo.relays if topo else ()), topo)
    guessed_bit, _, _ = measure_z(reconstructed, MESSAGE_LABEL, rng)
    return DecodeResult(
        status=DecodeStatus.UNAUTHORIZED,
        reconstructed=reconstructed,
        fidelity=fidelity(reconstructed, msg.state),
        guessed_bit=guessed_bit,
    )
