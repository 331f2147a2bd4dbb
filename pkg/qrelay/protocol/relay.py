"""Entanglement-keyed one-time pad over pass-through relays.

Alice masks the message qubit with X from key pair 1 (CNOT, control on her
half) and with Z from key pair 2 (CZ, control on her half). Bob repeats the
same controlled gates from his halves; the Phi+ correlations make both masks
cancel. Anyone without Bob's halves sees the message marginal as exactly I/2.
"""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ExpiredLinkError, ReplayError
from ..network.links import EntanglementLink, coherence_ok, consume
from ..noise.channels import (
    AttenuationSpec,
    CoherenceSpec,
    dephasing_channel,
    depolarizing_channel,
    sample_erasure,
    survival_probability,
)
from ..quantum.gates import CNOT, CZ
from ..quantum.state import QuantumState, QubitLabel, apply_channel, apply_unitary, fidelity, partial_trace, tensor
from ..validation import validate_probability
from .messages import MESSAGE_LABEL, MessageSpec


class DecodeStatus(str, Enum):
    OK = "ok"
    ERASED = "erased"
    EXPIRED = "expired"
    UNAUTHORIZED = "unauthorized"
    REPLAY = "replay"


@dataclass(frozen=True, eq=False)
class EncodedPayload:
    state: Optional[QuantumState]
    # the exact link records the message was masked with; ids alone can repeat across distributions
    key_links: Tuple[EntanglementLink, EntanglementLink]
    erased: bool = False
    emitted_at: float = 0.0
    # aging timestamp of each key link when it was absorbed into the payload
    key_ages: Tuple[float, float] = (0.0, 0.0)

    def __post_init__(self) -> None:
        if self.erased and self.state is not None:
            raise ValueError("an erased payload carries no state")
        if not self.erased and (self.state is None or MESSAGE_LABEL not in self.state.register):
            raise ValueError(f"payload state must contain the message qubit '{MESSAGE_LABEL}'")

    @property
    def key_link_ids(self) -> Tuple[int, int]:
        return self.key_links[0].id, self.key_links[1].id

    def keyed_by(self, link1: EntanglementLink, link2: EntanglementLink) -> bool:
        return link1 is self.key_links[0] and link2 is self.key_links[1]


@dataclass(frozen=True, eq=False)
class DecodeResult:
    status: DecodeStatus
    reconstructed: Optional[QuantumState] = None
    fidelity: Optional[float] = None
    guessed_bit: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.reconstructed is None) != (self.fidelity is None):
            raise ValueError("fidelity is present exactly when a reconstructed state is")
        if self.status == DecodeStatus.OK and self.reconstructed is None:
            raise ValueError("status ok requires a reconstructed state")


def encode(
    msg: MessageSpec,
    link1: EntanglementLink,
    link2: EntanglementLink,
    now: Optional[float] = None,
    coh: CoherenceSpec = CoherenceSpec(),
) -> EncodedPayload:
    """Mask the message with X keyed by ``link1`` and Z keyed by ``link2``."""
    if now is None:
        now = max(link1.created_at, link2.created_at)
    for link in (link1, link2):
        if link.consumed:
            raise ReplayError(link.id)
        if not coherence_ok(link, now, coh):
            raise ExpiredLinkError(link.id, now - link.created_at, coh.window)
    state = tensor(tensor(msg.state, link1.state), link2.state)
    state = apply_unitary(state, CNOT, [link1.sender_label, MESSAGE_LABEL])
    state = apply_unitary(state, CZ, [link2.sender_label, MESSAGE_LABEL])
    return EncodedPayload(
        state=state,
        key_links=(link1, link2),
        emitted_at=now,
        key_ages=(link1.aged_until, link2.aged_until),
    )


def relay_forward(payload: EncodedPayload, hop: AttenuationSpec, hop_depol: float, rng: np.random.Generator) -> EncodedPayload:
    """One pass-through hop: erase with the hop's loss, else depolarize the message qubit only."""
    if payload.erased:
        raise ValueError("cannot forward an erased payload")
    hop_depol = validate_probability(hop_depol, "hop_depol")
    if not sample_erasure(survival_probability(hop), rng):
        return replace(payload, state=None, erased=True)
    if hop_depol == 0.0:
        return payload
    return replace(payload, state=apply_channel(payload.state, depolarizing_channel(hop_depol), [MESSAGE_LABEL]))


def _absorb_pending_aging(state: QuantumState, payload: EncodedPayload, links: Sequence[EntanglementLink], coh: CoherenceSpec) -> QuantumState:
    # Dephasing accrued by a key link after encode acts on its qubits inside the payload.
    for slot, link in enumerate(links):
        if link.consumed or link is not payload.key_links[slot]:
            continue
        extra = link.aged_until - payload.key_ages[slot]
        if extra <= 0:
            continue
        channel = dephasing_channel(extra, coh)
        for label in link.labels:
            state = apply_channel(state, channel, [label])
    return state


def _bring_in(state: QuantumState, link: EntanglementLink) -> QuantumState:
    """Make Bob's half of ``link`` available in ``state`` under its own label."""
    label = link.receiver_label
    if label in state.register:
        return state
    return tensor(state, partial_trace(link.state, [label]))


def _gather_keys(state: QuantumState, payload: EncodedPayload, links: Sequence[EntanglementLink]) -> QuantumState:
    """Put the receiver halves of ``links`` next to the message.

    An embedded receiver qubit is only usable when the caller hands over that
    very link and its memory is intact. Otherwise it is traced out and the
    caller's link contributes its own receiver marginal.
    """
    for slot, link in enumerate(links):
        embedded = payload.key_links[slot].receiver_label
        if (link is not payload.key_links[slot] or link.consumed) and embedded in state.register:
            state = _discard(state, embedded)
    for link in links:
        state = _bring_in(state, link)
    return state


def _discard(state: QuantumState, label: QubitLabel) -> QuantumState:
    return partial_trace(state, [q for q in state.register if q != label])


def unmask(state: QuantumState, x_control: QubitLabel, z_control: QubitLabel) -> QuantumState:
    state = apply_unitary(state, CNOT, [x_control, MESSAGE_LABEL])
    return apply_unitary(state, CZ, [z_control, MESSAGE_LABEL])


def _readout(state: QuantumState, msg: MessageSpec, status: DecodeStatus) -> DecodeResult:
    reconstructed = partial_trace(state, [MESSAGE_LABEL])
    return DecodeResult(status=status, reconstructed=reconstructed, fidelity=fidelity(reconstructed, msg.state))


def decode(
    payload: EncodedPayload,
    link1: EntanglementLink,
    link2: EntanglementLink,
    msg: MessageSpec,
    now: float,
    coh: CoherenceSpec = CoherenceSpec(),
) -> DecodeResult:
    """Bob's unmasking. Wrong key material is the unauthorized path, not an error."""
    if payload.erased:
        return DecodeResult(status=DecodeStatus.ERASED)
    links = (link1, link2)
    if link1 is link2:
        raise ValueError(f"decode needs two distinct key links, got link {link1.id} twice")
    if any(link.consumed for link in links):
        return DecodeResult(status=DecodeStatus.REPLAY)
    if not all(coherence_ok(link, now, coh) for link in links):
        return DecodeResult(status=DecodeStatus.EXPIRED)

    authorized = payload.keyed_by(link1, link2)
    state = _absorb_pending_aging(payload.state, payload, links, coh)
    state = _gather_keys(state, payload, links)
    state = unmask(state, link1.receiver_label, link2.receiver_label)
    for link in links:
        consume(link)
    return _readout(state, msg, DecodeStatus.OK if authorized else DecodeStatus.UNAUTHORIZED)


def replay_decode(
    payload: EncodedPayload,
    link1: EntanglementLink,
    link2: EntanglementLink,
    msg: MessageSpec,
    now: float,
    coh: CoherenceSpec = CoherenceSpec(),
) -> DecodeResult:
    """Run the decode circuit with already-consumed (scrubbed) key memory."""
    links = (link1, link2)
    if not any(link.consumed for link in links):
        raise ValueError("replay_decode needs at least one consumed link")
    if payload.erased:
        return DecodeResult(status=DecodeStatus.ERASED)
    state = _absorb_pending_aging(payload.state, payload, links, coh)
    # a consumed link's physical qubit was reset; only its scrubbed marginal remains
    state = _gather_keys(state, payload, links)
    state = unmask(state, link1.receiver_label, link2.receiver_label)
    for link in links:
        if not link.consumed:
            consume(link)
    return _readout(state, msg, DecodeStatus.REPLAY)
