import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ychannel import Message, relay_combine, run_schedule, throughput, user_extract
from ychannel.fdf_protocol import ProtocolError, RelayIndex, slot_of, write_jsonl


def pair(a, b, q=16, route=(1, 2), frame=0):
    j, k = route
    return Message(a, j, k, frame), Message(b, k, j, frame)


@pytest.mark.parametrize("a, b, u", [(5, 9, 14), (9, 9, 2), (0, 0, 0)])
def test_combine_examples(a, b, u):
    m12, m21 = pair(a, b)
    idx = relay_combine(m12, m21, 16)
    assert idx.value == u and idx.pair == frozenset({1, 2})


@pytest.mark.parametrize("u, own, partner", [(14, 5, 9), (2, 9, 9), (0, 0, 0)])
def test_extract_examples(u, own, partner):
    got = user_extract(RelayIndex(u, frozenset({1, 2})), Message(own, 1, 2), 16)
    assert got.value == partner and (got.source, got.dest) == (2, 1)


def test_combine_rejects_mismatched_pair():
    with pytest.raises(ProtocolError):
        relay_combine(Message(1, 1, 2), Message(1, 3, 1), 16)
    with pytest.raises(ProtocolError):
        relay_combine(*pair(16, 0), 16)
    with pytest.raises(ProtocolError):
        relay_combine(*pair(0, 0), 1)


def test_extract_rejects_outsider():
    with pytest.raises(ProtocolError):
        user_extract(RelayIndex(3, frozenset({1, 2})), Message(1, 3, 1), 16)


def test_slots_follow_table():
    assert [slot_of(p) for p in ({1, 2}, {2, 3}, {1, 3})] == [1, 2, 3]


def test_round_trip_exhaustive_small_q():
    for q in range(2, 17):
        for a in range(q):
            for b in range(q):
                m12, m21 = pair(a, b, q)
                u = relay_combine(m12, m21, q)
                assert user_extract(u, m12, q).value == b
                assert user_extract(u, m21, q).value == a


def test_single_frame_hand_trace():
    transcripts, delivered, correct = run_schedule(1, 16, seed=0)
    assert correct and delivered == 6
    assert len(transcripts) == 4
    first, second, third, drain = transcripts
    assert first.relay_forward is None and first.decodes == []
    assert second.relay_forward == first.relay_combine
    assert {m.dest for m in second.decodes} == {1, 2}
    assert {m.dest for m in third.decodes} == {2, 3}
    assert drain.slot is None and drain.senders == []
    assert {m.dest for m in drain.decodes} == {1, 3}


def test_without_drain_two_messages_short():
    _, delivered, correct = run_schedule(5, 16, seed=2, drain=False)
    assert correct and delivered == 6 * 5 - 2


def test_binary_messages_long_run():
    _, delivered, correct = run_schedule(100, 2, seed=9)
    assert correct and delivered == 600


@pytest.mark.parametrize("frames, q", [(0, 16), (1, 1)])
def test_schedule_preconditions(frames, q):
    with pytest.raises(ProtocolError):
        run_schedule(frames, q, seed=0)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 60), st.integers(2, 2**16), st.integers(0, 2**32 - 1))
def test_schedule_invariants(frames, q, seed):
    transcripts, delivered, correct = run_schedule(frames, q, seed)
    assert correct and delivered == 6 * frames
    slotted = [t for t in transcripts if t.slot is not None]
    for f in range(frames):
        frame = slotted[3 * f:3 * f + 3]
        for user in (1, 2, 3):
            assert sum(user in t.active_users for t in frame) == 2
    for prev, cur in zip(transcripts, transcripts[1:]):
        if cur.relay_forward is not None:
            assert cur.relay_forward == prev.relay_combine
            assert cur.relay_forward is not cur.relay_combine


def test_throughput_counts():
    t1, _, _ = run_schedule(1, 16, seed=0)
    assert throughput(t1, 1.0) == pytest.approx(6 / 4)
    tb, _, _ = run_schedule(10_000, 16, seed=0)
    assert throughput(tb, 1.0) == pytest.approx(2.0, abs=1e-3)
    assert throughput(tb, 0.0) == 0.0
    assert throughput([], 1.0) == 0.0


def test_throughput_per_pair_rates():
    t, _, _ = run_schedule(3, 16, seed=1)
    rates = {(1, 2): 1.0, (2, 3): 2.0, (1, 3): 3.0}
    # Two messages per pair per frame.
    assert throughput(t, rates) == pytest.approx(3 * 2 * (1 + 2 + 3) / 10)


def test_jsonl_schema():
    t, _, _ = run_schedule(2, 8, seed=4)
    buf = io.StringIO()
    write_jsonl(t, buf)
    lines = [json.loads(x) for x in buf.getvalue().splitlines()]
    assert len(lines) == 7
    for rec in lines:
        assert {"block", "slot", "senders", "relay_forward", "decodes"} <= rec.keys()
    assert lines[0]["relay_forward"] is None
    assert set(lines[1]["relay_forward"]) >= {"pair", "value"}
    assert set(lines[1]["decodes"][0]) == {"user", "recovered_from", "value"}
    assert set(lines[0]["senders"][0]) == {"user", "dest", "value"}
