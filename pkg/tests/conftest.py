import math

import pytest
from hypothesis import strategies as st

from ychannel import ChannelGains, PowerBudget

REF_GAINS = ChannelGains(1.0, 0.8, 0.7)
SYM = ChannelGains.symmetric()


@pytest.fixture
def ref_gains():
    return REF_GAINS


@pytest.fixture
def p100():
    return PowerBudget.equal(100.0)


# Gains whose squares span 40 dB, with either sign.
gain = st.floats(-20, 20).map(lambda db: 10 ** (db / 20)) | st.floats(-20, 20).map(
    lambda db: -(10 ** (db / 20)))
gains = st.tuples(gain, gain, gain).map(lambda h: ChannelGains.canonical(*h))
power = st.floats(-30, 60).map(lambda db: 10 ** (db / 10))
equal_power = power.map(PowerBudget.equal)
any_power = st.tuples(power, power).map(lambda p: PowerBudget(*p))


def close(a, b, tol=1e-9):
    return math.isclose(float(a), float(b), rel_tol=0, abs_tol=tol)


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.append((criterion, bool(ok), detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
