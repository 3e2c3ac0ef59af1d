"""Achievable sum rates: complete DF, three-slot functional DF, two-user FDF."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .lp_solver import ThreeRateLP, solve_closed_form
from .model import ChannelGains, DomainError, PowerBudget, cap, clamp_plus

#: Per-block uplink power when each user is active in two of three slots.
FDF_POWER_BOOST = 1.5


def _clamped_cap(x: float) -> float:
    """``[C(x)]^+`` where `x` may dip into (-1, 0) after a noise offset."""
    if not x > -1.0:
        raise DomainError(f"capacity argument must exceed -1, got {x}")
    return clamp_plus(0.5 * math.log2(1.0 + x))


@dataclass(frozen=True)
class LowerBoundReport:
    c_I: float
    c_II: float
    c_III: float
    binding_terms: dict[str, str] = field(default_factory=dict, compare=False)

    @property
    def best(self) -> float:
        return max(self.c_I, self.c_II, self.c_III)

    @property
    def best_label(self) -> str:
        return max((("c_I", self.c_I), ("c_II", self.c_II), ("c_III", self.c_III)),
                   key=lambda t: t[1])[0]


def _cdf_terms(ch: ChannelGains, pw: PowerBudget) -> dict[str, float]:
    P, Pr = pw.p_user, pw.p_relay
    a, b, c = (cap(ch.sq(j) * Pr) for j in (1, 2, 3))
    lp_value, _ = solve_closed_form(ThreeRateLP(a, b, c))
    return {
        "mac": cap((ch.sq(1) + ch.sq(2) + ch.sq(3)) * P),
        "broadcast_lp": lp_value,
    }


def sum_lower_cdf(ch: ChannelGains, pw: PowerBudget) -> float:
    """Complete decode-and-forward: the relay decodes all six messages.

    The uplink is limited by the three-user MAC sum rate; the downlink by
    the broadcast LP, whose optimum is ``min{B + C, (A + B + C) / 2}``.
    """
    return min(_cdf_terms(ch, pw).values())


def _fdf_link(ch: ChannelGains, pw: PowerBudget, j: int, uplink_power: float) -> tuple[str, float]:
    up = _clamped_cap(ch.sq(j) * uplink_power - 0.5)
    down = cap(ch.sq(j) * pw.p_relay)
    return ("uplink", up) if up <= down else ("downlink", down)


def sum_lower_fdf(ch: ChannelGains, pw: PowerBudget) -> float:
    """Three-slot functional decode-and-forward with lattice alignment.

    Pair {1,2} is limited by user 2 and pairs {1,3}, {2,3} by user 3; each
    user transmits in two of three slots at power ``3P/2``. Startup loss
    of the relay's first silent block is ignored here.
    """
    boosted = FDF_POWER_BOOST * pw.p_user
    _, r12 = _fdf_link(ch, pw, 2, boosted)
    _, r3 = _fdf_link(ch, pw, 3, boosted)
    return (2 / 3) * r12 + (4 / 3) * r3


def sum_lower_fdf_two_user(ch: ChannelGains, pw: PowerBudget) -> float:
    """Users 1 and 2 run a two-way relay exchange full time; user 3 idles."""
    _, r = _fdf_link(ch, pw, 2, pw.p_user)
    return 2 * r


def lower_bound_report(ch: ChannelGains, pw: PowerBudget) -> LowerBoundReport:
    cdf = _cdf_terms(ch, pw)
    boosted = FDF_POWER_BOOST * pw.p_user
    b2, _ = _fdf_link(ch, pw, 2, boosted)
    b3, _ = _fdf_link(ch, pw, 3, boosted)
    b_two, _ = _fdf_link(ch, pw, 2, pw.p_user)
    return LowerBoundReport(
        c_I=min(cdf.values()),
        c_II=sum_lower_fdf(ch, pw),
        c_III=sum_lower_fdf_two_user(ch, pw),
        binding_terms={
            "c_I": min(cdf, key=cdf.__getitem__),
            "c_II": f"pair12:{b2},pairs13_23:{b3}",
            "c_III": b_two,
        },
    )
