"""Position-velocity-acceleration kinematics.

Continuous model: p' = v, v' = a, a' = w with white jerk noise of power
spectral density S per axis. Discretization over the epoch period T uses the
standard closed forms for the third-order integrator, validated in tests
against a matrix-exponential (Van Loan) oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidParams
from .linalg import sym_part
from .types import StateBelief, _freeze


@dataclass(frozen=True)
class PvaParams:
    """Epoch period T (s) and per-axis jerk noise PSD S (m^2/s^5)."""

    T: float = 1.0
    S: float = 1.0

    def __post_init__(self):
        if not np.isfinite(self.T) or self.T <= 0.0:
            raise InvalidParams(f"epoch period T must be positive, got {self.T}")
        if not np.isfinite(self.S) or self.S < 0.0:
            raise InvalidParams(f"noise PSD S must be nonnegative, got {self.S}")


@dataclass(frozen=True, eq=False)
class DiscreteModel:
    """Discrete transition matrix F and process-noise covariance Q."""

    F: np.ndarray
    Q: np.ndarray
    T: float

    def __post_init__(self):
        F = np.array(self.F, dtype=float)
        Q = np.array(self.Q, dtype=float)
        if F.ndim != 2 or F.shape[0] != F.shape[1] or Q.shape != F.shape:
            raise DimensionMismatch("F and Q must be square with equal shapes")
        scale = 1.0 + np.abs(Q).max()
        if np.abs(Q - Q.T).max() > 1e-9 * scale:
            raise ValueError("Q must be symmetric")
        Q = sym_part(Q)
        if np.linalg.eigvalsh(Q).min() < -1e-9 * scale:
            raise ValueError("Q must be positive semidefinite")
        object.__setattr__(self, "F", _freeze(F))
        object.__setattr__(self, "Q", _freeze(Q))
        object.__setattr__(self, "T", float(self.T))


def discretize_pva(params: PvaParams) -> DiscreteModel:
    """Discretize the white-jerk PVA model for state order (p1..p3, v1..v3, a1..a3).

    Per axis, F_a = [[1, T, T^2/2], [0, 1, T], [0, 0, 1]] and
    Q_a = S * [[T^5/20, T^4/8, T^3/6], [T^4/8, T^3/3, T^2/2], [T^3/6, T^2/2, T]].
    """
    T = params.T
    f_axis = np.array(
        [
            [1.0, T, 0.5 * T * T],
            [0.0, 1.0, T],
            [0.0, 0.0, 1.0],
        ]
    )
    q_axis = np.array(
        [
            [T**5 / 20.0, T**4 / 8.0, T**3 / 6.0],
            [T**4 / 8.0, T**3 / 3.0, T**2 / 2.0],
            [T**3 / 6.0, T**2 / 2.0, T],
        ]
    )
    eye3 = np.eye(3)
    return DiscreteModel(np.kron(f_axis, eye3), params.S * np.kron(q_axis, eye3), T)


def propagate(belief: StateBelief, model: DiscreteModel) -> StateBelief:
    """Time-propagate a belief: mean <- F mean, P <- F P F' + Q, t <- t + T."""
    if model.F.shape[0] != belief.n:
        raise DimensionMismatch(
            f"model dimension {model.F.shape[0]} does not match state size {belief.n}"
        )
    mean = model.F @ belief.mean
    cov = sym_part(model.F @ belief.covariance @ model.F.T + model.Q)
    return StateBelief(mean, cov, belief.time + model.T)
