"""Message-level simulation of the three-slot functional decode-and-forward schedule.

Each frame has three slots. In each slot one pair of users transmits,
and the relay forms an index from the pair's two messages. The relay
forwards that index in the next block, and each user of the pair
recovers its partner's message from the index and its own message.

The decoded lattice superposition is modelled as addition mod ``q``.
Given one summand this is a bijection, which is all the protocol needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

#: Active pair per slot (1-based slot -> users).
SLOT_PAIRS: dict[int, tuple[int, int]] = {1: (1, 2), 2: (2, 3), 3: (1, 3)}
USERS = (1, 2, 3)


class ProtocolError(ValueError):
    pass


@dataclass(frozen=True)
class Message:
    value: int
    source: int
    dest: int
    frame: int = 0

    def __post_init__(self):
        if self.source not in USERS or self.dest not in USERS or self.source == self.dest:
            raise ProtocolError(f"invalid message route {self.source}->{self.dest}")
        if self.value < 0 or self.frame < 0:
            raise ProtocolError("message value and frame must be non-negative")

    @property
    def pair(self) -> frozenset[int]:
        return frozenset((self.source, self.dest))


@dataclass(frozen=True)
class RelayIndex:
    value: int
    pair: frozenset[int]
    frame: int = 0

    def to_json(self) -> dict:
        return {"pair": sorted(self.pair), "value": self.value, "frame": self.frame}


def slot_of(pair) -> int:
    """Slot (1, 2 or 3) in which the given user pair transmits."""
    pair = frozenset(pair)
    for slot, users in SLOT_PAIRS.items():
        if frozenset(users) == pair:
            return slot
    raise ProtocolError(f"no slot for pair {sorted(pair)}")


def relay_combine(m_a: Message, m_b: Message, q: int) -> RelayIndex:
    if q < 2:
        raise ProtocolError(f"q must be >= 2, got {q}")
    if (m_a.source, m_a.dest) != (m_b.dest, m_b.source):
        raise ProtocolError(
            f"messages {m_a.source}->{m_a.dest} and {m_b.source}->{m_b.dest} "
            "are not a reciprocal pair"
        )
    if m_a.frame != m_b.frame:
        raise ProtocolError("messages belong to different frames")
    if m_a.value >= q or m_b.value >= q:
        raise ProtocolError(f"message value out of range for q={q}")
    return RelayIndex((m_a.value + m_b.value) % q, m_a.pair, m_a.frame)


def user_extract(u: RelayIndex, own: Message, q: int) -> Message:
    """Recover the partner's message from a relay index and one's own message."""
    if own.pair != u.pair:
        raise ProtocolError(
            f"user {own.source} holds no message of pair {sorted(u.pair)}"
        )
    if own.value >= q or u.value >= q:
        raise ProtocolError(f"value out of range for q={q}")
    return Message((u.value - own.value) % q, own.dest, own.source, u.frame)


@dataclass
class FrameTranscript:
    """What happened in one block of the schedule.

    ``slot`` is None for the trailing relay-only drain block.
    """

    block: int
    frame: int
    slot: int | None
    senders: list[Message] = field(default_factory=list)
    relay_combine: RelayIndex | None = None
    relay_forward: RelayIndex | None = None
    decodes: list[Message] = field(default_factory=list)

    @property
    def active_users(self) -> tuple[int, ...]:
        return tuple(sorted(m.source for m in self.senders))

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "frame": self.frame,
            "slot": self.slot,
            "senders": [{"user": m.source, "dest": m.dest, "value": m.value}
                        for m in self.senders],
            "relay_combine": None if self.relay_combine is None else self.relay_combine.to_json(),
            "relay_forward": None if self.relay_forward is None else self.relay_forward.to_json(),
            "decodes": [{"user": m.dest, "recovered_from": m.source, "value": m.value}
                        for m in self.decodes],
        }


def run_schedule(frames: int, q: int, seed: int, drain: bool = True
                 ) -> tuple[list[FrameTranscript], int, bool]:
    """Simulate `frames` frames of the schedule.

    Messages are drawn uniformly from ``[0, q)``. The relay is silent in
    block 0 and forwards each index one block after forming it. With
    `drain`, a final relay-only block flushes the last index, so all
    ``6 * frames`` messages are delivered; without it ``6 * frames - 2``.

    Returns
    -------
    transcripts, delivered, correct
        ``correct`` is True iff every recovered message equals the one sent.
    """
    if frames < 1:
        raise ProtocolError(f"frames must be >= 1, got {frames}")
    if q < 2:
        raise ProtocolError(f"q must be >= 2, got {q}")
    rng = np.random.default_rng(seed)
    sent: dict[tuple[int, int, int], int] = {}
    transcripts: list[FrameTranscript] = []
    pending: tuple[RelayIndex, tuple[Message, Message]] | None = None
    delivered = 0
    correct = True

    def forward(rec: FrameTranscript):
        nonlocal pending, delivered, correct
        if pending is None:
            return
        u, (m_a, m_b) = pending
        rec.relay_forward = u
        for own in (m_a, m_b):
            got = user_extract(u, own, q)
            rec.decodes.append(got)
            delivered += 1
            correct &= got.value == sent[(got.source, got.dest, got.frame)]
        pending = None

    for f in range(frames):
        values = rng.integers(0, q, size=6)
        for s in (1, 2, 3):
            rec = FrameTranscript(block=len(transcripts), frame=f, slot=s)
            a, b = SLOT_PAIRS[s]
            m_a = Message(int(values[2 * (s - 1)]), a, b, f)
            m_b = Message(int(values[2 * (s - 1) + 1]), b, a, f)
            for m in (m_a, m_b):
                sent[(m.source, m.dest, f)] = m.value
            rec.senders = [m_a, m_b]
            # Forward last block's index before overwriting it with this one.
            forward(rec)
            rec.relay_combine = relay_combine(m_a, m_b, q)
            pending = (rec.relay_combine, (m_a, m_b))
            transcripts.append(rec)

    if drain:
        rec = FrameTranscript(block=len(transcripts), frame=frames - 1, slot=None)
        forward(rec)
        transcripts.append(rec)
    return transcripts, delivered, correct


def throughput(transcripts: list[FrameTranscript], rate_per_message=1.0) -> float:
    """Delivered bits per block.

    `rate_per_message` is either one rate for every pair or a mapping
    from user pairs (any 2-element iterable key) to rates.
    """
    if not transcripts:
        return 0.0
    if isinstance(rate_per_message, dict):
        rates = {frozenset(k): float(v) for k, v in rate_per_message.items()}
    else:
        rates = None
    bits = 0.0
    for rec in transcripts:
        for m in rec.decodes:
            bits += rates[m.pair] if rates is not None else float(rate_per_message)
    return bits / len(transcripts)


def write_jsonl(transcripts: list[FrameTranscript], fh):
    for rec in transcripts:
        fh.write(json.dumps(rec.to_json()) + "\n")
