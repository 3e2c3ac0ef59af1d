"""The six-dimensional outer bound on the capacity region and its sum-rate LP."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lp_solver import LinearProgramSpec, solve_simplex
from .model import ATOL, ChannelGains, ChannelMode, PowerBudget, RateTuple
from .upper_bounds import (
    RateConstraint,
    bc_pair_bounds,
    cutset_pair_bounds,
    single_user_bounds,
    triple_bounds,
)


@dataclass(frozen=True)
class RatePolytope:
    constraints: tuple[RateConstraint, ...]
    mode: ChannelMode

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.constraints)

    def by_label(self, label: str) -> RateConstraint:
        for c in self.constraints:
            if c.label == label:
                return c
        raise KeyError(label)

    def as_program(self) -> LinearProgramSpec:
        return LinearProgramSpec(
            objective=(1.0,) * 6,
            constraints=tuple((tuple(map(float, c.coefficients)), c.rhs)
                              for c in self.constraints),
        )

    def contains(self, rates, tol: float = ATOL) -> bool:
        r = np.asarray(rates.as_tuple() if isinstance(rates, RateTuple) else rates, dtype=float)
        return bool(np.all(r >= -tol)) and all(c.slack(r) >= -tol for c in self.constraints)


def build_outer_region(ch: ChannelGains, pw: PowerBudget,
                       mode: ChannelMode = ChannelMode.GENERAL) -> RatePolytope:
    """Collect every proven constraint family; dominated rows are kept."""
    constraints = (
        single_user_bounds(ch, pw)
        + cutset_pair_bounds(ch, pw)
        + bc_pair_bounds(ch, pw)
        + triple_bounds(ch, pw, mode)
    )
    return RatePolytope(tuple(constraints), mode)


def max_sum_rate(poly: RatePolytope) -> tuple[float, RateTuple]:
    value, point = solve_simplex(poly.as_program())
    return value, RateTuple.from_vector(point)


def three_constraint_covers(poly: RatePolytope) -> list[tuple[RateConstraint, RateConstraint, RateConstraint]]:
    """Triples of constraints whose left-hand sides add up to the sum rate."""
    out = []
    cons = poly.constraints
    for a in range(len(cons)):
        for b in range(a + 1, len(cons)):
            for c in range(b + 1, len(cons)):
                total = np.add(np.add(cons[a].coefficients, cons[b].coefficients),
                               cons[c].coefficients)
                if np.all(total == 1):
                    out.append((cons[a], cons[b], cons[c]))
    return out
