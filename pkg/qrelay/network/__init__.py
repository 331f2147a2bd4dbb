"""Entanglement graph: nodes, relay path and pre-shared links."""
from .links import (
    ATTEMPT_CAP,
    EntanglementLink,
    age_link,
    assign_holders,
    coherence_ok,
    consume,
    distribute_pairs,
    pair_label,
)
from .topology import DEFAULT_HOP_DB, Node, NodeRole, Topology, build_topology, default_topology

__all__ = [
    "ATTEMPT_CAP", "DEFAULT_HOP_DB", "EntanglementLink", "Node", "NodeRole", "Topology",
    "age_link", "assign_holders", "build_topology", "coherence_ok", "consume", "default_topology",
    "distribute_pairs", "pair_label",
]
