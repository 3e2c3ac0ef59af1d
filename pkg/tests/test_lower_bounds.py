import pytest
from hypothesis import given

from ychannel import (
    ChannelGains,
    ChannelMode,
    PowerBudget,
    cap,
    lower_bound_report,
    sum_lower_cdf,
    sum_lower_fdf,
    sum_lower_fdf_two_user,
    sum_upper_cutset,
    sum_upper_general,
    sum_upper_restricted,
)

from . import oracles
from .conftest import REF_GAINS, SYM, any_power, equal_power, gains

P100 = PowerBudget.equal(100.0)
ZERO = PowerBudget(0.0, 0.0)


def test_cdf_examples():
    assert sum_lower_cdf(REF_GAINS, P100) == pytest.approx(3.8707334932005735, abs=1e-12)
    assert sum_lower_cdf(SYM, P100) == pytest.approx(4.1168098383798510, abs=1e-12)
    assert sum_lower_cdf(REF_GAINS, PowerBudget(0.0, 100.0)) == 0


def test_fdf_examples():
    assert sum_lower_fdf(REF_GAINS, P100) == pytest.approx(5.7700267308593012, abs=1e-12)
    assert sum_lower_fdf(REF_GAINS, ZERO) == 0
    # With h3 = 0 only the {1,2} pair contributes.
    no3 = ChannelGains(1.0, 0.8, 0.0)
    assert sum_lower_fdf(no3, P100) == pytest.approx(2 / 3 * cap(64), abs=1e-12)


def test_two_user_examples():
    assert sum_lower_fdf_two_user(REF_GAINS, P100) == pytest.approx(6.0112272554232543, abs=1e-12)
    assert sum_lower_fdf_two_user(SYM, P100) == pytest.approx(6.6510516911789286, abs=1e-12)
    # h2^2 P = 0.4 puts the uplink argument below zero: clamp to 0.
    assert sum_lower_fdf_two_user(ChannelGains(1.0, 0.2, 0.1), PowerBudget.equal(10.0)) == 0


def test_report():
    rep = lower_bound_report(REF_GAINS, P100)
    assert rep.best == rep.c_III
    assert rep.best_label == "c_III"
    assert rep.binding_terms["c_I"] == "mac"
    assert rep.binding_terms["c_III"] == "uplink"


def test_three_slot_fdf_beats_two_user_when_h3_equals_h2():
    ch = ChannelGains(1.0, 0.8, 0.8)
    assert sum_lower_fdf(ch, P100) > sum_lower_fdf_two_user(ch, P100)


@given(gains, any_power)
def test_against_oracle(ch, pw):
    P, Pr = pw.p_user, pw.p_relay
    kw = dict(rel=1e-12, abs=1e-12)
    assert sum_lower_cdf(ch, pw) == pytest.approx(float(oracles.c_I(ch.h, P, Pr)), **kw)
    assert sum_lower_fdf(ch, pw) == pytest.approx(float(oracles.c_II(ch.h, P, Pr)), **kw)
    assert sum_lower_fdf_two_user(ch, pw) == pytest.approx(float(oracles.c_III(ch.h, P, Pr)), **kw)


@given(gains, equal_power)
def test_cdf_at_least_single_link(ch, pw):
    assert sum_lower_cdf(ch, pw) >= cap(ch.sq(2) * pw.p_user) - 1e-12


@given(gains, equal_power)
def test_sandwich(ch, pw):
    lows = lower_bound_report(ch, pw)
    for up in (sum_upper_cutset(ch, pw), sum_upper_general(ch, pw), sum_upper_restricted(ch, pw)):
        for lo in (lows.c_I, lows.c_II, lows.c_III):
            assert 0 <= lo <= up + 1e-12
