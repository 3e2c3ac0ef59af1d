"""Core types for the Gaussian Y-channel: gains, powers, rate tuples.

All rates are in bits per channel use (log base 2). Powers are linear.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

#: Absolute tolerance for equality checks throughout the package.
ATOL = 1e-9

#: Ordered message pairs (source, destination) in rate-vector order.
PAIRS: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (2, 1), (2, 3), (3, 1), (3, 2))
RATE_NAMES: tuple[str, ...] = tuple(f"r{j}{k}" for j, k in PAIRS)


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class PreconditionError(ValueError):
    """A bound was requested outside the assumptions under which it holds."""


def cap(x: float) -> float:
    """AWGN capacity ``0.5 * log2(1 + x)`` in bits per channel use.

    Raises
    ------
    DomainError
        If `x` is negative or not finite.
    """
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"cap() requires a finite non-negative argument, got {x!r}")
    return 0.5 * math.log2(1.0 + x)


def clamp_plus(x: float) -> float:
    return x if x > 0.0 else 0.0


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    return 10.0 * math.log10(x)


class ChannelMode(enum.Enum):
    GENERAL = "general"
    RESTRICTED = "restricted"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class ChannelGains:
    """Real user-relay coefficients ordered so that h1^2 >= h2^2 >= h3^2.

    ``permutation[i]`` is the original (1-based) user index now sitting
    in canonical slot ``i + 1``; it is the identity unless the gains came
    from :meth:`canonical`.
    """

    h1: float
    h2: float
    h3: float
    permutation: tuple[int, int, int] = field(default=(1, 2, 3), compare=False)
    squares: tuple[float, float, float] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for h in (self.h1, self.h2, self.h3):
            if not math.isfinite(h):
                raise DomainError(f"channel gains must be finite, got {h!r}")
        if not (self.h1**2 >= self.h2**2 >= self.h3**2):
            raise DomainError(
                f"gains ({self.h1}, {self.h2}, {self.h3}) violate the ordering "
                "h1^2 >= h2^2 >= h3^2; use ChannelGains.canonical() to reorder"
            )
        if sorted(self.permutation) != [1, 2, 3]:
            raise DomainError(f"invalid permutation {self.permutation!r}")
        object.__setattr__(self, "squares", (self.h1**2, self.h2**2, self.h3**2))

    @classmethod
    def canonical(cls, h1: float, h2: float, h3: float) -> "ChannelGains":
        """Relabel users so the ordering invariant holds.

        Sorting is stable, so ties keep their original relative order.
        """
        raw = (h1, h2, h3)
        order = sorted(range(3), key=lambda i: -raw[i] ** 2)
        return cls(*(raw[i] for i in order), permutation=tuple(i + 1 for i in order))

    @classmethod
    def symmetric(cls) -> "ChannelGains":
        return cls(1.0, 1.0, 1.0)

    @property
    def h(self) -> tuple[float, float, float]:
        return (self.h1, self.h2, self.h3)

    def gain(self, j: int) -> float:
        """Coefficient of user `j` (1-based)."""
        return self.h[j - 1]

    def sq(self, j: int) -> float:
        return self.squares[j - 1]

    @property
    def is_symmetric(self) -> bool:
        return self.h1 == self.h2 == self.h3 == 1.0


@dataclass(frozen=True)
class PowerBudget:
    p_user: float
    p_relay: float

    def __post_init__(self):
        for p in (self.p_user, self.p_relay):
            if not math.isfinite(p) or p < 0:
                raise DomainError(f"powers must be finite and non-negative, got {p!r}")

    @classmethod
    def equal(cls, p: float) -> "PowerBudget":
        return cls(p, p)

    @classmethod
    def from_db(cls, p_db: float, p_relay_db: float | None = None) -> "PowerBudget":
        p = db_to_linear(p_db)
        return cls(p, p if p_relay_db is None else db_to_linear(p_relay_db))

    @property
    def is_equal(self) -> bool:
        return self.p_user == self.p_relay


@dataclass(frozen=True)
class RateTuple:
    """The six unicast rates (r12, r13, r21, r23, r31, r32)."""

    r12: float = 0.0
    r13: float = 0.0
    r21: float = 0.0
    r23: float = 0.0
    r31: float = 0.0
    r32: float = 0.0

    def __post_init__(self):
        for name in RATE_NAMES:
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0:
                raise DomainError(f"{name} must be finite and non-negative, got {v!r}")

    @classmethod
    def from_vector(cls, values, clip: float = ATOL) -> "RateTuple":
        """Build from a length-6 sequence; tiny negatives within `clip` become 0."""
        vals = [float(v) for v in values]
        if len(vals) != 6:
            raise DomainError(f"expected 6 rates, got {len(vals)}")
        vals = [0.0 if -clip <= v < 0 else v for v in vals]
        return cls(*vals)

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(getattr(self, n) for n in RATE_NAMES)

    def rate(self, j: int, k: int) -> float:
        return getattr(self, f"r{j}{k}")

    @property
    def sum_rate(self) -> float:
        return math.fsum(self.as_tuple())


def pair_index(j: int, k: int) -> int:
    """Position of R_jk in the rate vector."""
    return PAIRS.index((j, k))
