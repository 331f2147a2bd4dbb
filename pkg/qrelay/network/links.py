"""Lifecycle of pre-shared entangled pairs: distribution, aging, expiry, single use.

A link is a single-owner record. ``age_link`` and ``consume`` update it in place
and return it; one trial owns its links exclusively.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from ..errors import DistributionError, ReplayError
from ..noise.channels import CoherenceSpec, dephasing_channel, sample_erasure, werner_pair
from ..quantum.state import QuantumState, QubitLabel, apply_channel
from ..quantum.states import maximally_mixed
from ..validation import validate_probability
from .topology import Node, NodeRole, Topology

ATTEMPT_CAP = 1_000_000


@dataclass
class EntanglementLink:
    id: int
    endpoints: Tuple[str, str]
    degradation: float
    state: QuantumState
    created_at: float
    consumed: bool = False
    aged_until: Optional[float] = None

    def __post_init__(self) -> None:
        if self.endpoints[0] == self.endpoints[1]:
            raise ValueError(f"link {self.id} endpoints must be distinct, got {self.endpoints}")
        if self.state.register != self.labels:
            raise ValueError(f"link {self.id} state register {self.state.register} does not match {self.labels}")
        if self.aged_until is None:
            self.aged_until = self.created_at

    @property
    def sender_label(self) -> QubitLabel:
        return pair_label(self.endpoints[0], self.id)

    @property
    def receiver_label(self) -> QubitLabel:
        return pair_label(self.endpoints[1], self.id)

    @property
    def labels(self) -> Tuple[QubitLabel, QubitLabel]:
        return self.sender_label, self.receiver_label


def pair_label(node_id: str, link_id: int) -> QubitLabel:
    return f"{node_id}.k{link_id}"


def distribute_pairs(
    topo: Topology,
    sender: str,
    receiver: str,
    count: int,
    x: float,
    herald_loss: float,
    now: float,
    rng: np.random.Generator,
    beta: float = 1.0,
    first_id: int = 1,
    attempt_cap: int = ATTEMPT_CAP,
) -> Tuple[List[EntanglementLink], int]:
    """Herald ``count`` pairs between sender and receiver; returns (links, attempts).

    Each surviving pair is stored as werner_pair(beta * x).
    """
    if topo.node(sender).role != NodeRole.SENDER:
        raise ValueError(f"'{sender}' is not a sender")
    if topo.node(receiver).role != NodeRole.RECEIVER:
        raise ValueError(f"'{receiver}' is not a receiver")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    x = validate_probability(x, "degradation x")
    herald_loss = validate_probability(herald_loss, "herald_loss")
    x_eff = validate_probability(beta * x, "effective degradation beta*x")

    if herald_loss >= 1.0:
        logging.error("distribution_unreachable sender=%s receiver=%s attempt_cap=%d", sender, receiver, attempt_cap)
        raise DistributionError(f"no pair can be heralded with herald_loss=1 (cap {attempt_cap} attempts per link)")

    links: List[EntanglementLink] = []
    attempts = 0
    for offset in range(count):
        for _ in range(attempt_cap):
            attempts += 1
            if sample_erasure(1.0 - herald_loss, rng):
                break
        else:
            raise DistributionError(f"pair {offset + 1}/{count} not heralded after {attempt_cap} attempts")
        link_id = first_id + offset
        labels = (pair_label(sender, link_id), pair_label(receiver, link_id))
        links.append(
            EntanglementLink(
                id=link_id,
                endpoints=(sender, receiver),
                degradation=x,
                state=werner_pair(x_eff, labels),
                created_at=now,
            )
        )
    return links, attempts


def assign_holders(topo: Topology, links: Sequence[EntanglementLink]) -> Topology:
    """Topology whose nodes hold the key qubits of ``links``; node validation re-runs."""
    held: Dict[str, Set[QubitLabel]] = {}
    for link in links:
        for node_id, label in zip(link.endpoints, link.labels):
            held.setdefault(node_id, set()).add(label)
    nodes = tuple(
        Node(id=n.id, role=n.role, held_qubits=n.held_qubits | held.get(n.id, set()), memory_coh=n.memory_coh)
        for n in topo.nodes
    )
    return topo.model_copy(update={"nodes": nodes})


def coherence_ok(link: EntanglementLink, now: float, coh: CoherenceSpec) -> bool:
    """True while the link's age is within the (inclusive) coherence window."""
    if now < link.created_at:
        raise ValueError(f"clock regression: now={now} precedes link {link.id} creation at {link.created_at}")
    return (now - link.created_at) <= coh.window


def age_link(link: EntanglementLink, now: float, coh: CoherenceSpec) -> EntanglementLink:
    """Dephase both qubits of the link up to ``now``."""
    if now < link.aged_until:
        raise ValueError(f"clock regression: now={now} precedes link {link.id} age {link.aged_until}")
    channel = dephasing_channel(now - link.aged_until, coh)
    state = link.state
    for label in link.labels:
        state = apply_channel(state, channel, [label])
    link.state = state
    link.aged_until = now
    return link


def consume(link: EntanglementLink) -> EntanglementLink:
    """Mark the link used and scrub its memory to I/4."""
    if link.consumed:
        raise ReplayError(link.id)
    link.consumed = True
    link.state = maximally_mixed(link.labels)
    return link
