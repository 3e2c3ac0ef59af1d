"""Small dense linear programs over rate vectors.

Three routes are provided and cross-checked in the tests:

* :func:`solve_closed_form` for the three-aggregate broadcast LP,
* :func:`solve_simplex`, a tableau simplex with Bland's rule,
* :func:`enumerate_vertices_oracle`, brute-force basic feasible solutions.

Only problems of the form ``max c.x  s.t.  A x <= b, x >= 0`` with
``b >= 0`` are supported, so the origin is always a feasible start.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .model import ATOL, DomainError, PreconditionError, RateTuple

PIVOT_TOL = 1e-9
MAX_SIMPLEX_VARS = 16
MAX_ORACLE_VARS = 8
# Vertices closer than this are the same point reached from different bases.
DEDUP_TOL = 1e-12


class UnboundedError(ArithmeticError):
    """The objective can be increased without limit."""


@dataclass(frozen=True)
class ThreeRateLP:
    """``max x+y+z`` s.t. ``x+y <= a, y+z <= b, z+x <= c``, all non-negative.

    `a`, `b`, `c` are the downlink capacities to users 1, 2 and 3; `x`,
    `y`, `z` aggregate the outgoing rates of users 2, 3 and 1.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        if not (self.a >= self.b >= self.c >= 0):
            raise PreconditionError(
                f"ThreeRateLP needs a >= b >= c >= 0, got ({self.a}, {self.b}, {self.c})"
            )

    def as_program(self) -> "LinearProgramSpec":
        return LinearProgramSpec(
            objective=(1.0, 1.0, 1.0),
            constraints=(((1.0, 1.0, 0.0), self.a),
                         ((0.0, 1.0, 1.0), self.b),
                         ((1.0, 0.0, 1.0), self.c)),
        )


@dataclass(frozen=True)
class LinearProgramSpec:
    objective: tuple[float, ...]
    constraints: tuple[tuple[tuple[float, ...], float], ...]

    def __post_init__(self):
        n = len(self.objective)
        if not 1 <= n <= MAX_SIMPLEX_VARS:
            raise DomainError(f"need 1..{MAX_SIMPLEX_VARS} variables, got {n}")
        for weights, rhs in self.constraints:
            if len(weights) != n:
                raise DomainError(f"constraint has {len(weights)} weights, expected {n}")
            if not (np.isfinite(rhs) and rhs >= 0):
                raise DomainError(f"constraint rhs must be finite and >= 0, got {rhs}")

    @property
    def n(self) -> int:
        return len(self.objective)

    def matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        c = np.asarray(self.objective, dtype=float)
        if self.constraints:
            A = np.array([w for w, _ in self.constraints], dtype=float)
            b = np.array([r for _, r in self.constraints], dtype=float)
        else:
            A, b = np.zeros((0, self.n)), np.zeros(0)
        return c, A, b

    def is_feasible(self, x, tol: float = ATOL) -> bool:
        _, A, b = self.matrices()
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= -tol) and np.all(A @ x <= b + tol))


def solve_closed_form(lp: ThreeRateLP) -> tuple[float, tuple[float, float, float]]:
    a, b, c = lp.a, lp.b, lp.c
    if a < b + c:
        return (a + b + c) / 2, ((a - b + c) / 2, (a + b - c) / 2, (-a + b + c) / 2)
    return b + c, (c, b, 0.0)


def solve_simplex(spec: LinearProgramSpec) -> tuple[float, np.ndarray]:
    """Maximise ``spec`` with a dense tableau simplex.

    Entering and leaving variables follow Bland's smallest-index rule,
    which guarantees termination on degenerate problems.

    Raises
    ------
    UnboundedError
        If some improving column has no positive entry.
    """
    c, A, b = spec.matrices()
    m, n = A.shape
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -c
    basis = list(range(n, n + m))

    # Bland's rule cannot cycle, so this only guards against tolerance bugs.
    max_iter = 50 * (n + m + 1) ** 2
    for _ in range(max_iter):
        improving = np.flatnonzero(T[m, :-1] < -PIVOT_TOL)
        if improving.size == 0:
            break
        col = int(improving[0])
        rows = np.flatnonzero(T[:m, col] > PIVOT_TOL)
        if rows.size == 0:
            raise UnboundedError(f"objective unbounded along variable {col}")
        ratios = T[rows, -1] / T[rows, col]
        best = ratios.min()
        ties = rows[ratios <= best + PIVOT_TOL * max(1.0, abs(best))]
        row = int(min(ties, key=lambda r: basis[r]))
        T[row] /= T[row, col]
        for r in range(m + 1):
            if r != row and T[r, col] != 0.0:
                T[r] -= T[r, col] * T[row]
        basis[row] = col
    else:
        raise RuntimeError("simplex iteration limit reached")

    x = np.zeros(n + m)
    for r, v in enumerate(basis):
        x[v] = T[r, -1]
    point = np.clip(x[:n], 0.0, None)
    return float(c @ point), point


def enumerate_vertices_oracle(spec: LinearProgramSpec, tol: float = ATOL) -> list[np.ndarray]:
    """All vertices of ``{x >= 0, A x <= b}`` by brute force.

    Every choice of `n` tight constraints (including the bounds ``x_i >= 0``)
    is solved; nonsingular, feasible solutions are kept and de-duplicated.
    """
    if spec.n > MAX_ORACLE_VARS:
        raise DomainError(f"vertex enumeration refuses n={spec.n} > {MAX_ORACLE_VARS}")
    _, A, b = spec.matrices()
    n = spec.n
    G = np.vstack([A, -np.eye(n)])
    h = np.concatenate([b, np.zeros(n)])
    vertices: list[np.ndarray] = []
    for rows in combinations(range(G.shape[0]), n):
        sub = G[list(rows)]
        with np.errstate(all="ignore"):
            singular = not abs(np.linalg.det(sub)) > 1e-12
        if singular:
            continue
        x = np.linalg.solve(sub, h[list(rows)])
        if np.all(G @ x <= h + tol) and not any(np.allclose(x, v, rtol=0, atol=DEDUP_TOL) for v in vertices):
            vertices.append(x)
    return vertices


def maximize_over_vertices(spec: LinearProgramSpec) -> tuple[float, np.ndarray]:
    c, _, _ = spec.matrices()
    vertices = enumerate_vertices_oracle(spec)
    best = max(vertices, key=lambda v: float(c @ v))
    return float(c @ best), best


def disaggregate(x: float, y: float, z: float) -> RateTuple:
    """Rate tuple whose per-user outgoing sums are ``(z, x, y)`` for users 1, 2, 3."""
    return RateTuple.from_vector([z, 0.0, x, 0.0, y, 0.0])
