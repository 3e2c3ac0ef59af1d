"""Sum-capacity upper bounds and per-rate constraint families.

Every constraint is an unweighted sum of distinct rates bounded by a
capacity expression. Constraints are evaluated for all index choices so
the assembled outer region never depends on which instances a proof
happened to combine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations

from .model import (
    PAIRS,
    RATE_NAMES,
    ChannelGains,
    ChannelMode,
    DomainError,
    PowerBudget,
    PreconditionError,
    cap,
    pair_index,
)

USERS = (1, 2, 3)


@dataclass(frozen=True)
class RateConstraint:
    """``sum(coefficients[i] * R[i]) <= rhs`` over the rate vector.

    `label` names the generating family and its user indices; `binding`
    names which argument of the min produced `rhs` (empty if only one).
    """

    coefficients: tuple[int, int, int, int, int, int]
    rhs: float
    label: str
    binding: str = ""

    def __post_init__(self):
        if len(self.coefficients) != 6 or any(c not in (0, 1) for c in self.coefficients):
            raise DomainError(f"coefficients must be six 0/1 weights, got {self.coefficients}")
        if not any(self.coefficients):
            raise DomainError("coefficient vector must be nonzero")
        if not (math.isfinite(self.rhs) and self.rhs >= 0):
            raise DomainError(f"rhs must be finite and non-negative, got {self.rhs}")

    @classmethod
    def over(cls, pairs, rhs, label, binding=""):
        coeffs = [0] * 6
        for j, k in pairs:
            coeffs[pair_index(j, k)] = 1
        return cls(tuple(coeffs), rhs, label, binding)

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(p for p, c in zip(PAIRS, self.coefficients) if c)

    def lhs_text(self) -> str:
        return " + ".join(n for n, c in zip(RATE_NAMES, self.coefficients) if c)

    def slack(self, rates) -> float:
        return self.rhs - sum(c * r for c, r in zip(self.coefficients, rates))


def _others(j: int) -> tuple[int, int]:
    k, l = (u for u in USERS if u != j)
    return k, l


def _argmin(terms: dict[str, float]) -> tuple[str, float]:
    name = min(terms, key=terms.__getitem__)
    return name, terms[name]


def single_user_bounds(ch: ChannelGains, pw: PowerBudget) -> list[RateConstraint]:
    out = []
    for j, k in PAIRS:
        name, rhs = _argmin({"uplink": cap(ch.sq(j) * pw.p_user),
                             "downlink": cap(ch.sq(k) * pw.p_relay)})
        out.append(RateConstraint.over([(j, k)], rhs, f"single[{j}{k}]", name))
    return out


def cutset_pair_bounds(ch: ChannelGains, pw: PowerBudget) -> list[RateConstraint]:
    """Outgoing (``r_jk + r_jl``) and incoming (``r_jl + r_kl``) cut-set pairs."""
    P, Pr = pw.p_user, pw.p_relay
    out = []
    for j in USERS:
        k, l = _others(j)
        name, rhs = _argmin({"cut_user": ch.sq(j) * P,
                             "cut_relay": (ch.sq(k) + ch.sq(l)) * Pr})
        out.append(RateConstraint.over([(j, k), (j, l)], cap(rhs), f"cutset_out[{j}]", name))
    for l in USERS:
        j, k = _others(l)
        name, rhs = _argmin({"cut_users": (abs(ch.gain(j)) + abs(ch.gain(k))) ** 2 * P,
                             "cut_relay": ch.sq(l) * Pr})
        out.append(RateConstraint.over([(j, l), (k, l)], cap(rhs), f"cutset_in[{l}]", name))
    return out


def bc_pair_bounds(ch: ChannelGains, pw: PowerBudget) -> list[RateConstraint]:
    """Degraded-broadcast bounds on each user's outgoing pair.

    Uses the stronger of the two receivers, which under the gain ordering
    gives h2 for user 1 and h1 for users 2 and 3.
    """
    out = []
    for j in USERS:
        k, l = _others(j)
        rhs = cap(max(ch.sq(k), ch.sq(l)) * pw.p_relay)
        out.append(RateConstraint.over([(j, k), (j, l)], rhs, f"bc[{j}]"))
    return out


def triple_terms(ch: ChannelGains, pw: PowerBudget, j: int, k: int, l: int,
                 mode: ChannelMode = ChannelMode.GENERAL) -> dict[str, float]:
    """Candidate right-hand sides for ``r_kj + r_lj + r_kl``."""
    P, Pr = pw.p_user, pw.p_relay
    terms = {
        "relay": cap((ch.sq(j) + ch.sq(l)) * Pr),
        "coherent": cap((abs(ch.gain(k)) + abs(ch.gain(l))) ** 2 * P),
    }
    if mode is ChannelMode.RESTRICTED:
        terms["independent"] = cap((ch.sq(k) + ch.sq(l)) * P)
    return terms


def triple_bounds(ch: ChannelGains, pw: PowerBudget,
                  mode: ChannelMode = ChannelMode.GENERAL) -> list[RateConstraint]:
    out = []
    for j, k, l in permutations(USERS):
        name, rhs = _argmin(triple_terms(ch, pw, j, k, l, mode))
        out.append(RateConstraint.over([(k, j), (l, j), (k, l)], rhs,
                                       f"triple[{j}{k}{l}]", name))
    return out


def _require_equal_power(pw: PowerBudget, bound: str) -> float:
    if not pw.is_equal:
        raise PreconditionError(
            f"{bound} is only established for equal user and relay power "
            f"(P = Pr); got P={pw.p_user}, Pr={pw.p_relay}"
        )
    return pw.p_user


def sum_upper_cutset(ch: ChannelGains, pw: PowerBudget) -> float:
    """Cut-set sum bound ``2 C(h2^2 P) + C(h3^2 P)`` (needs P = Pr)."""
    P = _require_equal_power(pw, "the cut-set sum bound")
    return 2 * cap(ch.sq(2) * P) + cap(ch.sq(3) * P)


def sum_upper_general(ch: ChannelGains, pw: PowerBudget) -> float:
    """Genie-aided sum bound with pre-log 1 (needs P = Pr).

    Adds the triple bounds for (j,k,l) = (2,1,3) and (1,2,3), which
    together cover every rate exactly once.
    """
    P = _require_equal_power(pw, "the genie-aided sum bound")
    h2, h3 = abs(ch.h2), abs(ch.h3)
    return (cap((ch.sq(2) + ch.sq(3)) * P)
            + cap(min((ch.sq(1) + ch.sq(3)) * P, (h2 + h3) ** 2 * P)))


def sum_upper_restricted(ch: ChannelGains, pw: PowerBudget) -> float:
    """Sum bound ``2 C(h2^2 P + h3^2 P)`` for restricted encoders (needs P = Pr)."""
    P = _require_equal_power(pw, "the restricted-encoder sum bound")
    return 2 * cap((ch.sq(2) + ch.sq(3)) * P)


def symmetric_uppers(pw: PowerBudget) -> tuple[float, float, float]:
    """Upper bounds ``(c_cs, c_s, c_g)`` for unit gains; P and Pr may differ."""
    P, Pr = pw.p_user, pw.p_relay
    return (3 * min(cap(P), cap(Pr)), 2 * cap(2 * Pr), 2 * cap(4 * P))
