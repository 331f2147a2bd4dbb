"""Entanglement-keyed encoding, relay forwarding, decoding and the failure modes."""
from .adversary import AdversaryStrategy, adversary_decode
from .messages import MESSAGE_LABEL, MessageKind, MessageSpec, basis_message, bloch_message, draw_message, haar_message
from .relay import DecodeResult, DecodeStatus, EncodedPayload, decode, encode, relay_forward, replay_decode

__all__ = [
    "AdversaryStrategy", "DecodeResult", "DecodeStatus", "EncodedPayload", "MESSAGE_LABEL",
    "MessageKind", "MessageSpec", "adversary_decode", "basis_message", "bloch_message",
    "decode", "draw_message", "encode", "haar_message", "relay_forward", "replay_decode",
]
