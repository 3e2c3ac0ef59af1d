import pytest
from hypothesis import given, settings

from ychannel import (
    ChannelMode,
    PowerBudget,
    build_outer_region,
    lower_bound_report,
    max_sum_rate,
    sum_upper_cutset,
    sum_upper_general,
    sum_upper_restricted,
)
from ychannel.outer_region import RatePolytope, three_constraint_covers
from ychannel.upper_bounds import RateConstraint

from .conftest import REF_GAINS, SYM, equal_power, gains

P100 = PowerBudget.equal(100.0)


@pytest.mark.parametrize("mode", [ChannelMode.GENERAL, ChannelMode.RESTRICTED])
def test_constraint_count_and_labels(mode):
    poly = build_outer_region(REF_GAINS, P100, mode)
    assert len(poly.constraints) == 21
    assert len(set(poly.labels)) == 21


def test_restricted_tightens_triples_only():
    gen = build_outer_region(REF_GAINS, P100, ChannelMode.GENERAL)
    res = build_outer_region(REF_GAINS, P100, ChannelMode.RESTRICTED)
    for a, b in zip(gen.constraints, res.constraints):
        if a.label.startswith("triple"):
            assert b.rhs <= a.rhs
        else:
            assert b.rhs == a.rhs
    assert res.by_label("triple[123]").rhs < gen.by_label("triple[123]").rhs


def test_ref_gains_region_max():
    value, argmax = max_sum_rate(build_outer_region(REF_GAINS, P100))
    assert value <= sum_upper_general(REF_GAINS, P100) + 1e-9
    assert argmax.sum_rate == pytest.approx(value)
    assert build_outer_region(REF_GAINS, P100).contains(argmax)


def test_symmetric_region_max():
    value, _ = max_sum_rate(build_outer_region(SYM, P100))
    assert value <= 7.6510516911789286 + 1e-9


def test_zero_power_region_is_origin():
    value, argmax = max_sum_rate(build_outer_region(REF_GAINS, PowerBudget(0.0, 0.0)))
    assert value == 0 and argmax.sum_rate == 0


def test_covers_include_proof_combinations():
    poly = build_outer_region(REF_GAINS, P100)
    labels = {frozenset(c.label for c in cover) for cover in three_constraint_covers(poly)}
    assert frozenset({"bc[1]", "cutset_out[2]", "cutset_out[3]"}) in labels
    # Two triples cover all six rates, so they pair with nothing else.
    assert all(sum(sum(c.coefficients) for c in cover) == 6
               for cover in three_constraint_covers(poly))


@settings(max_examples=60, deadline=None)
@given(gains, equal_power)
def test_region_bounded_by_every_cover_and_above_lowers(ch, pw):
    for mode in (ChannelMode.GENERAL, ChannelMode.RESTRICTED):
        poly = build_outer_region(ch, pw, mode)
        value, argmax = max_sum_rate(poly)
        assert poly.contains(argmax)
        for cover in three_constraint_covers(poly):
            assert value <= sum(c.rhs for c in cover) + 1e-9
        # The two triple rows used by the genie-aided sum bound.
        pair = poly.by_label("triple[213]").rhs + poly.by_label("triple[123]").rhs
        assert value <= pair + 1e-9
        assert value <= sum_upper_cutset(ch, pw) + 1e-9
        assert value <= sum_upper_general(ch, pw) + 1e-9
        if mode is ChannelMode.RESTRICTED:
            assert value <= sum_upper_restricted(ch, pw) + 1e-9
        lows = lower_bound_report(ch, pw)
        assert value >= lows.best - 1e-9


@settings(max_examples=60, deadline=None)
@given(gains, equal_power)
def test_restricted_optimum_not_above_general(ch, pw):
    gen, _ = max_sum_rate(build_outer_region(ch, pw, ChannelMode.GENERAL))
    res, _ = max_sum_rate(build_outer_region(ch, pw, ChannelMode.RESTRICTED))
    assert res <= gen + 1e-9


@settings(max_examples=60, deadline=None)
@given(gains, equal_power)
def test_enlarging_rhs_never_decreases_optimum(ch, pw):
    poly = build_outer_region(ch, pw)
    base, _ = max_sum_rate(poly)
    for i in range(0, len(poly.constraints), 4):
        cons = list(poly.constraints)
        c = cons[i]
        cons[i] = RateConstraint(c.coefficients, c.rhs + 0.5, c.label)
        bigger, _ = max_sum_rate(RatePolytope(tuple(cons), poly.mode))
        assert bigger >= base - 1e-9
