from enum import Enum
from typing import FrozenSet, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..noise.channels import AttenuationSpec, CoherenceSpec, survival_probability

DEFAULT_HOP_DB = 10.0


class NodeRole(str, Enum):
    SENDER = "sender"
    RECEIVER = "receiver"
    RELAY = "relay"
    ADVERSARY = "adversary"


class Node(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    role: NodeRole
    held_qubits: FrozenSet[str] = frozenset()
    memory_coh: CoherenceSpec = CoherenceSpec()

    @model_validator(mode="after")
    def _relays_hold_no_keys(self) -> "Node":
        # pass-through: relays never hold key material
        if self.role == NodeRole.RELAY and self.held_qubits:
            raise ValueError(f"relay '{self.id}' cannot hold entangled key qubits")
        return self


class Topology(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    nodes: Tuple[Node, ...]
    message_path: Tuple[str, ...]
    hop_attenuations: Tuple[AttenuationSpec, ...]

    @model_validator(mode="after")
    def _check_path(self) -> "Topology":
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError(f"node ids must be unique, got {ids}")
        if len(self.message_path) < 2:
            raise ValueError("message_path needs at least a sender and a receiver")
        for node_id in self.message_path:
            if node_id not in ids:
                raise ValueError(f"message_path references unknown node '{node_id}'")
        if self.node(self.message_path[0]).role != NodeRole.SENDER:
            raise ValueError(f"message_path must start at a sender, got '{self.message_path[0]}'")
        if self.node(self.message_path[-1]).role != NodeRole.RECEIVER:
            raise ValueError(f"message_path must end at a receiver, got '{self.message_path[-1]}'")
        for node_id in self.message_path[1:-1]:
            if self.node(node_id).role != NodeRole.RELAY:
                raise ValueError(f"interior path node '{node_id}' must be a relay")
        if len(self.hop_attenuations) != len(self.message_path) - 1:
            raise ValueError(
                f"expected {len(self.message_path) - 1} hop attenuations, got {len(self.hop_attenuations)}"
            )
        return self

    def node(self, node_id: str) -> Node:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise ValueError(f"unknown node '{node_id}'")

    @property
    def sender(self) -> str:
        return self.message_path[0]

    @property
    def receiver(self) -> str:
        return self.message_path[-1]

    @property
    def relays(self) -> List[str]:
        return list(self.message_path[1:-1])

    @property
    def hops(self) -> int:
        return len(self.hop_attenuations)

    def end_to_end_survival(self) -> float:
        total = 1.0
        for hop in self.hop_attenuations:
            total *= survival_probability(hop)
        return total


def build_topology(nodes: Sequence[Node], message_path: Sequence[str], hop_db: Sequence[float]) -> Topology:
    return Topology(
        nodes=tuple(nodes),
        message_path=tuple(message_path),
        hop_attenuations=tuple(AttenuationSpec(db=db) for db in hop_db),
    )


def default_topology(hop_db: float = DEFAULT_HOP_DB) -> Topology:
    """alice -> r1 -> r2 -> r3 -> bob, equal attenuation on every hop."""
    nodes = [
        Node(id="alice", role=NodeRole.SENDER),
        Node(id="r1", role=NodeRole.RELAY),
        Node(id="r2", role=NodeRole.RELAY),
        Node(id="r3", role=NodeRole.RELAY),
        Node(id="bob", role=NodeRole.RECEIVER),
    ]
    path = [n.id for n in nodes]
    return build_topology(nodes, path, [hop_db] * (len(path) - 1))
