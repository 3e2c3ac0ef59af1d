"""Additive and multiplicative gaps between the sum-capacity bounds.

Two regimes are distinguished by ``h2^2 P``. At or below 1/2 the cut-set
bound is compared with complete decode-and-forward; above it the
genie-aided (or restricted-encoder) bound is compared with two-user
functional decode-and-forward.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .lower_bounds import sum_lower_cdf, sum_lower_fdf, sum_lower_fdf_two_user
from .model import ATOL, ChannelGains, ChannelMode, PowerBudget, PreconditionError
from .upper_bounds import (
    sum_upper_cutset,
    sum_upper_general,
    sum_upper_restricted,
    symmetric_uppers,
)

LOW_POWER_THRESHOLD = 0.5
LOW_POWER_CAP = math.log2(1.5)
HIGH_POWER_CAP = {ChannelMode.GENERAL: 2.5, ChannelMode.RESTRICTED: 2.0}
MULTIPLICATIVE_CAP = 3.0
SYMMETRIC_CAP = 1.0
SYMMETRIC_GRID_CAP = 1.5


class Regime(enum.Enum):
    LOW_POWER = "low_power"
    HIGH_POWER = "high_power"


class CertificationError(AssertionError):
    """A sampled instance violates a constant-gap claim."""


def regime_of(ch: ChannelGains, pw: PowerBudget) -> Regime:
    # The boundary h2^2 P = 1/2 belongs to the low-power branch.
    if ch.sq(2) * pw.p_user <= LOW_POWER_THRESHOLD:
        return Regime.LOW_POWER
    return Regime.HIGH_POWER


def high_power_gap_bound(snr2: float, mode: ChannelMode = ChannelMode.GENERAL) -> float:
    """Instance bound on the high-power gap as a function of ``h2^2 P``.

    ``log2(2 + 1/snr2) + 1/2`` for general encoders (tends to 3/2) and
    ``log2(2 + 1/snr2)`` for restricted ones (tends to 1).
    """
    base = math.log2(2.0 + 1.0 / snr2)
    return base if mode is ChannelMode.RESTRICTED else base + 0.5


@dataclass(frozen=True)
class GapReport:
    regime: Regime
    mode: ChannelMode
    additive_gap: float
    multiplicative_gap: float | None
    analytic_cap: float
    upper_used: str
    lower_used: str
    upper_value: float
    lower_value: float

    def as_dict(self) -> dict:
        d = asdict(self)
        d["regime"] = self.regime.value
        d["mode"] = self.mode.value
        return d


def gap(ch: ChannelGains, pw: PowerBudget, mode: ChannelMode = ChannelMode.GENERAL) -> GapReport:
    """Gap between the best applicable bounds at equal user/relay power.

    ``multiplicative_gap`` is None when the complete-DF rate is zero,
    where the ratio is undefined.
    """
    if mode is ChannelMode.SYMMETRIC:
        if not ch.is_symmetric:
            raise PreconditionError("symmetric mode requires h1 = h2 = h3 = 1")
        mode = ChannelMode.GENERAL
    c_sigma = sum_upper_cutset(ch, pw)
    c_I = sum_lower_cdf(ch, pw)
    multiplicative = c_sigma / c_I if c_I > 0 else None

    regime = regime_of(ch, pw)
    if regime is Regime.LOW_POWER:
        return GapReport(regime, mode, c_sigma - c_I, multiplicative, LOW_POWER_CAP,
                         "c_sigma", "c_I", c_sigma, c_I)

    if mode is ChannelMode.RESTRICTED:
        upper, upper_name = sum_upper_restricted(ch, pw), "c_sigma_r"
    else:
        upper, upper_name = sum_upper_general(ch, pw), "c_sigma_g"
    c_III = sum_lower_fdf_two_user(ch, pw)
    cap_ = min(HIGH_POWER_CAP[mode], high_power_gap_bound(ch.sq(2) * pw.p_user, mode))
    return GapReport(regime, mode, upper - c_III, multiplicative, cap_,
                     upper_name, "c_III", upper, c_III)


def symmetric_lowers(pw: PowerBudget) -> tuple[float, float, float]:
    ch = ChannelGains.symmetric()
    return sum_lower_cdf(ch, pw), sum_lower_fdf(ch, pw), sum_lower_fdf_two_user(ch, pw)


def symmetric_gap(pw: PowerBudget) -> float:
    """Best upper minus best lower bound for unit gains; P and Pr may differ."""
    return min(symmetric_uppers(pw)) - max(symmetric_lowers(pw))


# -- certification sweep -----------------------------------------------------

@dataclass(frozen=True)
class Sampler:
    """Random Y-channel instances with P = Pr.

    Power is log-uniform in dB; each power gain ``h^2`` is log-uniform in
    dB with a random sign on ``h``. Gains are then relabelled into the
    canonical order.
    """

    p_db: tuple[float, float] = (-30.0, 60.0)
    gain_db: tuple[float, float] = (-20.0, 20.0)

    def draw(self, rng: np.random.Generator) -> tuple[ChannelGains, PowerBudget]:
        p = 10.0 ** (rng.uniform(*self.p_db) / 10.0)
        g = 10.0 ** (rng.uniform(*self.gain_db, size=3) / 20.0)
        flip = rng.random(3) < 0.5
        h = [float(-v if f else v) for f, v in zip(flip, g)]
        return ChannelGains.canonical(*h), PowerBudget.equal(float(p))

    def instance(self, seed: int, trial: int) -> tuple[ChannelGains, PowerBudget]:
        """Replay trial `trial` of a sweep with master seed `seed`."""
        return self.draw(np.random.default_rng([seed, trial]))


@dataclass
class ClaimResult:
    claim: str
    bound: float
    max_observed: float | None = None
    witness: dict | None = None
    witness_trial: int | None = None
    samples: int = 0
    violations: int = 0

    def observe(self, value: float, ch: ChannelGains, pw: PowerBudget, trial: int):
        self.samples += 1
        if value > self.bound + ATOL:
            self.violations += 1
        if self.max_observed is None or value > self.max_observed:
            self.max_observed = value
            self.witness = {"h1": ch.h1, "h2": ch.h2, "h3": ch.h3,
                            "P": pw.p_user, "Pr": pw.p_relay}
            self.witness_trial = trial

    @property
    def passed(self) -> bool:
        return self.violations == 0

    @property
    def slack(self) -> float | None:
        return None if self.max_observed is None else self.bound - self.max_observed


@dataclass
class Certificate:
    trials: int
    seed: int
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def claim(self, name: str) -> ClaimResult:
        for c in self.claims:
            if c.claim == name:
                return c
        raise KeyError(name)

    def records(self) -> list[dict]:
        return [{"claim": c.claim, "bound": c.bound, "max_observed": c.max_observed,
                 "witness": c.witness, "witness_trial": c.witness_trial,
                 "samples": c.samples, "violations": c.violations, "passed": c.passed,
                 "trials": self.trials, "seed": self.seed}
                for c in self.claims]

    def to_json(self, **kwargs) -> str:
        return json.dumps({"passed": self.passed, "claims": self.records()}, **kwargs)

    def raise_for_failure(self):
        for c in self.claims:
            if not c.passed:
                raise CertificationError(
                    f"claim {c.claim!r} (bound {c.bound}) violated {c.violations} time(s); "
                    f"worst {c.max_observed} at trial {c.witness_trial}: {c.witness}"
                )


def certify_gaps(trials: int, seed: int, sampler: Sampler | None = None,
                 modes=(ChannelMode.GENERAL, ChannelMode.RESTRICTED)) -> Certificate:
    """Check the constant-gap claims on `trials` seeded random instances.

    Trial ``i`` draws from ``default_rng([seed, i])``, so any witness can be
    replayed with :meth:`Sampler.instance` and results do not depend on
    evaluation order.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    sampler = sampler or Sampler()
    modes = tuple(ChannelMode(m) for m in modes)
    mult = ClaimResult("multiplicative", MULTIPLICATIVE_CAP)
    low = ClaimResult("additive_low_power", LOW_POWER_CAP)
    high = {m: ClaimResult(f"additive_high_power_{m.value}", HIGH_POWER_CAP[m]) for m in modes}
    sym = ClaimResult("symmetric_equal_power", SYMMETRIC_CAP)

    for trial in range(trials):
        ch, pw = sampler.instance(seed, trial)
        for i, mode in enumerate(modes):
            rep = gap(ch, pw, mode)
            if rep.regime is Regime.HIGH_POWER:
                high[mode].observe(rep.additive_gap, ch, pw, trial)
            elif i == 0:
                low.observe(rep.additive_gap, ch, pw, trial)
            if i == 0 and rep.multiplicative_gap is not None:
                mult.observe(rep.multiplicative_gap, ch, pw, trial)
        sym.observe(symmetric_gap(pw), ChannelGains.symmetric(), pw, trial)

    return Certificate(trials, seed, [mult, low, *high.values(), sym])
