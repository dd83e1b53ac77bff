"""Baseline estimators: the selection-parameterized MAP measurement update,
the standard Kalman filter (all measurements), and the Kalman filter with
threshold-decision outlier removal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DimensionMismatch, InvalidParams
from .linalg import chol_solve, spd_inverse, sym_part
from .types import MeasurementBatch, SelectionVector, StateBelief


@dataclass(frozen=True)
class TdConfig:
    """Threshold-decision gate configuration.

    ``lam`` is the acceptance threshold in units of the normalizing standard
    deviation. ``normalization`` selects the denominator of the test:
    "innovation" uses sqrt(h P h' + sigma^2), "sigma" uses sigma alone.
    """

    lam: float = 2.0
    normalization: Literal["innovation", "sigma"] = "innovation"

    def __post_init__(self):
        if not np.isfinite(self.lam) or self.lam <= 0.0:
            raise InvalidParams(f"threshold lam must be positive, got {self.lam}")
        if self.normalization not in ("innovation", "sigma"):
            raise InvalidParams(f"unknown normalization {self.normalization!r}")


def _check_dims(belief: StateBelief, batch: MeasurementBatch) -> None:
    if batch.n != belief.n:
        raise DimensionMismatch(
            f"batch rows have {batch.n} columns but state size is {belief.n}"
        )


def map_update_with_selection(
    belief: StateBelief, batch: MeasurementBatch, selection: SelectionVector
) -> tuple[np.ndarray, StateBelief]:
    """Information-form measurement update using only the selected rows.

    Returns the MAP estimate and the posterior belief with
    J+ = inv(P-) + sum_i b_i h_i' h_i / sigma_i^2 and
    x_hat = x_bar + inv(J+) sum_i b_i h_i' (y_i - h_i x_bar) / sigma_i^2.

    Raises NotPositiveDefinite if the prior covariance is singular.
    """
    _check_dims(belief, batch)
    if selection.mode != "binary":
        raise ValueError("measurement update requires a binary selection")
    if len(selection) != batch.m:
        raise DimensionMismatch(
            f"selection has {len(selection)} entries for {batch.m} measurements"
        )
    b = selection.entries
    if batch.m == 0 or b.sum() == 0.0:
        # No information added; keep the prior covariance bit-for-bit.
        return belief.mean.copy(), StateBelief(
            belief.mean, belief.covariance, belief.time
        )
    j_prior = belief.information
    w = b / batch.sigmas**2
    h = batch.rows
    j_post = sym_part(j_prior + h.T @ (w[:, None] * h))
    rhs = h.T @ (w * (batch.values - h @ belief.mean))
    x_hat = belief.mean + chol_solve(j_post, rhs)
    p_post = spd_inverse(j_post)
    return x_hat, StateBelief(x_hat, p_post, belief.time)


def kf_update(
    belief: StateBelief, batch: MeasurementBatch
) -> tuple[np.ndarray, StateBelief]:
    """Standard Kalman measurement update: select everything (b = 1)."""
    return map_update_with_selection(belief, batch, SelectionVector.ones(batch.m))


def innovation_std(belief: StateBelief, batch: MeasurementBatch) -> np.ndarray:
    """Per-measurement prior innovation standard deviations sqrt(h P h' + sigma^2)."""
    _check_dims(belief, batch)
    hph = np.einsum("ij,jk,ik->i", batch.rows, belief.covariance, batch.rows)
    return np.sqrt(hph + batch.sigmas**2)


def td_select(
    belief: StateBelief, batch: MeasurementBatch, cfg: TdConfig = TdConfig()
) -> SelectionVector:
    """Gate each measurement independently against the prior.

    Keeps measurement i iff |y_i - h_i x_bar| <= lam * s_i, where s_i is the
    configured normalizing standard deviation. No sequential re-conditioning.
    """
    _check_dims(belief, batch)
    innovations = batch.values - batch.rows @ belief.mean
    if cfg.normalization == "innovation":
        s = innovation_std(belief, batch)
    else:
        s = batch.sigmas
    return SelectionVector.from_mask(np.abs(innovations) <= cfg.lam * s)


def td_update(
    belief: StateBelief, batch: MeasurementBatch, cfg: TdConfig = TdConfig()
) -> tuple[SelectionVector, np.ndarray, StateBelief]:
    """Threshold-decision update: gate, then MAP-update with the survivors."""
    b_td = td_select(belief, batch, cfg)
    estimate, posterior = map_update_with_selection(belief, batch, b_td)
    return b_td, estimate, posterior
