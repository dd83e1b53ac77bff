"""Domain types shared by every module.

All types are frozen dataclasses whose array fields are copied on
construction and marked read-only, so values are immutable and safe to share
across concurrent estimator runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Literal

import numpy as np

from .errors import DimensionMismatch, NotPositiveDefinite
from .linalg import spd_inverse, sym_part


def _freeze(a, dtype=float) -> np.ndarray:
    out = np.array(a, dtype=dtype)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class StateBelief:
    """Gaussian belief over the state at one epoch.

    ``covariance`` must be symmetric (to 1e-12 relative) and positive
    semidefinite; strict positive definiteness is required, and checked, only
    where the information matrix is actually formed.
    """

    mean: np.ndarray
    covariance: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        mean = _freeze(np.atleast_1d(np.asarray(self.mean, dtype=float)))
        cov = np.array(self.covariance, dtype=float)
        if mean.ndim != 1:
            raise DimensionMismatch("mean must be a vector")
        if cov.shape != (mean.size, mean.size):
            raise DimensionMismatch(
                f"covariance shape {cov.shape} does not match state size {mean.size}"
            )
        scale = 1.0 + np.abs(cov).max()
        if np.abs(cov - cov.T).max() > 1e-12 * scale:
            raise ValueError("covariance is not symmetric to 1e-12 relative")
        cov = sym_part(cov)
        if np.linalg.eigvalsh(cov).min() < -1e-10 * scale:
            raise NotPositiveDefinite("covariance has a negative eigenvalue")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "covariance", _freeze(cov))
        object.__setattr__(self, "time", float(self.time))

    @property
    def n(self) -> int:
        return self.mean.size

    @cached_property
    def information(self) -> np.ndarray:
        """Inverse covariance. Raises NotPositiveDefinite when singular."""
        return _freeze(spd_inverse(self.covariance))


@dataclass(frozen=True, eq=False)
class MeasurementBatch:
    """One epoch of scalar measurements: values y, row vectors H, noise sigmas."""

    values: np.ndarray
    rows: np.ndarray
    sigmas: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        values = _freeze(np.atleast_1d(np.asarray(self.values, dtype=float)))
        rows = np.array(self.rows, dtype=float)
        sigmas = _freeze(np.atleast_1d(np.asarray(self.sigmas, dtype=float)))
        if rows.ndim != 2:
            raise DimensionMismatch("rows must be a 2-D matrix")
        m = values.size
        if rows.shape[0] != m or sigmas.size != m:
            raise DimensionMismatch(
                f"inconsistent batch: {m} values, rows {rows.shape}, {sigmas.size} sigmas"
            )
        if m and sigmas.min() <= 0.0:
            raise ValueError("all measurement sigmas must be positive")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "rows", _freeze(rows))
        object.__setattr__(self, "sigmas", sigmas)
        object.__setattr__(self, "time", float(self.time))

    @property
    def m(self) -> int:
        return self.values.size

    @property
    def n(self) -> int:
        return self.rows.shape[1]


SelectionMode = Literal["binary", "relaxed"]

_RELAXED_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SelectionVector:
    """Per-measurement usage decisions b, binary or relaxed to [0, 1]."""

    entries: np.ndarray
    mode: SelectionMode = "binary"

    def __post_init__(self):
        entries = _freeze(np.atleast_1d(np.asarray(self.entries, dtype=float)))
        if entries.ndim != 1:
            raise DimensionMismatch("selection entries must be a vector")
        if self.mode == "binary":
            if entries.size and not np.all((entries == 0.0) | (entries == 1.0)):
                raise ValueError("binary selection entries must be exactly 0 or 1")
        elif self.mode == "relaxed":
            if entries.size and (
                entries.min() < -_RELAXED_TOL or entries.max() > 1.0 + _RELAXED_TOL
            ):
                raise ValueError("relaxed selection entries must lie in [0, 1]")
        else:
            raise ValueError(f"unknown selection mode {self.mode!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def ones(cls, m: int) -> "SelectionVector":
        return cls(np.ones(m), "binary")

    @classmethod
    def zeros(cls, m: int) -> "SelectionVector":
        return cls(np.zeros(m), "binary")

    @classmethod
    def from_mask(cls, mask) -> "SelectionVector":
        return cls(np.asarray(mask, dtype=float), "binary")

    def __len__(self) -> int:
        return self.entries.size

    @property
    def n_selected(self) -> int:
        if self.mode != "binary":
            raise ValueError("n_selected is defined for binary selections only")
        return int(round(float(self.entries.sum())))


@dataclass(frozen=True, eq=False)
class InfoSpec:
    """Elementwise lower bound on the posterior information diagonal.

    Zero entries leave the corresponding state unconstrained. ``matrix()``
    is the diagonal embedding used by the full-matrix solver variant.
    """

    diag_lower_bound: np.ndarray

    def __post_init__(self):
        dlb = _freeze(np.atleast_1d(np.asarray(self.diag_lower_bound, dtype=float)))
        if dlb.ndim != 1:
            raise DimensionMismatch("diag_lower_bound must be a vector")
        if dlb.size and dlb.min() < 0.0:
            raise ValueError("information lower bounds must be nonnegative")
        object.__setattr__(self, "diag_lower_bound", dlb)

    @classmethod
    def for_positions(cls, values=(1.389, 1.389, 0.347), n: int = 9) -> "InfoSpec":
        """Spec constraining only the leading position states."""
        dlb = np.zeros(n)
        dlb[: len(values)] = values
        return cls(dlb)

    @property
    def n(self) -> int:
        return self.diag_lower_bound.size

    def matrix(self) -> np.ndarray:
        return np.diag(self.diag_lower_bound)


class SolveStatus(Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE_SPEC = "InfeasibleSpec"
    ITERATION_LIMIT = "IterationLimit"


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Outcome of one measurement-selection solve.

    For ``INFEASIBLE_SPEC`` the payload is the all-selected (b = 1) solution
    so a filtering run can keep going; ``risk`` is always the MAP cost of the
    reported (selection, estimate) pair. ``gap`` is the absolute optimality
    gap at termination (0 for completed solves).
    """

    selection: SelectionVector
    estimate: np.ndarray
    posterior_information: np.ndarray
    risk: float
    status: SolveStatus
    nodes_explored: int
    wall_time: float
    gap: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "estimate", _freeze(self.estimate))
        object.__setattr__(
            self, "posterior_information", _freeze(self.posterior_information)
        )
