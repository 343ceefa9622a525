"""
allocation.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import tqdm  # type: ignore[import]

from ..errors import ShapeMismatchError
from ..raster.grid import Grid
from .ca_param import CaParam


@dataclass
class AllocationState:
    """
    貪欲配分の途中の状態.
    """

    suitability: npt.NDArray[np.float64]  # (C, H, W)
    multipliers: npt.NDArray[np.float64]  # (C,)
    allocation: Grid
    iteration: int
    deficits: npt.NDArray[np.float64]

    @classmethod
    def initial(cls, suitability: npt.NDArray[np.float64], template: Grid) -> "AllocationState":
        """乗数 1 から始める状態. template は nodata の位置を決める."""
        if suitability.ndim != 3 or suitability.shape[1:] != template.shape:
            raise ShapeMismatchError(f"{__name__}: {suitability.shape=} does not match {template.shape=}")
        class_count = suitability.shape[0]
        allocation = Grid.categorical(
            np.zeros(template.shape, dtype=np.uint8),
            pixel_size=template.pixel_size,
            nodata_mask=template.mask.copy(),
        )
        return cls(suitability, np.ones(class_count), allocation, 0, np.zeros(class_count))


@dataclass(frozen=True)
class AllocationResult:
    """配分の結果. converged が False なら max_iter で打ち切った."""

    grid: Grid
    iterations: int
    converged: bool
    deficits: npt.NDArray[np.float64]
    multipliers: npt.NDArray[np.float64]


def _assign(state: AllocationState) -> npt.NDArray[np.uint8]:
    scored = state.multipliers[:, None, None] * state.suitability
    return np.argmax(scored, axis=0).astype(np.uint8)


def allocate(
    state: AllocationState,
    targets: npt.ArrayLike,
    *,
    eta: float = CaParam.eta,
    tolerance: float = CaParam.tolerance,
    max_iter: int = CaParam.max_iter,
    show_progress: bool = False,
) -> AllocationResult:
    """
    各画素に multiplier_c * suitability_c が最大のクラスを割り当て, 過不足に応じて乗数を
    exp(eta * deficit_c / target_c) 倍する. 全クラスの |deficit| が max(1, tolerance * target)
    以下になるか, max_iter 回で終わる.

    Parameters
    ----------
    targets : array_like
        クラスごとの目標面積 [セル]. 和は有効画素数.
    """
    target = np.asarray(targets, dtype=np.float64).reshape(-1)
    class_count = state.suitability.shape[0]
    if target.shape != (class_count,):
        raise ShapeMismatchError(f"{__name__}: {target.shape=} does not match {class_count} classes")
    if np.any(target < 0) or not np.all(np.isfinite(target)):
        raise ValueError(f"{__name__}: targets must be non-negative, got {target}")
    valid = state.allocation.valid
    cell_count = int(valid.sum())
    if not np.isclose(target.sum(), cell_count, rtol=1e-9, atol=1e-6):
        raise ValueError(f"{__name__}: targets sum to {target.sum()}, expected {cell_count} cells")

    band = np.maximum(1.0, tolerance * target)
    denom = np.maximum(target, 1.0)
    converged = False
    for _ in tqdm.tqdm(range(max_iter), disable=not show_progress, desc="allocate"):
        labels = _assign(state)
        allocated = np.bincount(labels[valid].astype(np.int64), minlength=class_count).astype(np.float64)
        state.deficits = target - allocated
        state.allocation = state.allocation.with_values(labels)
        state.iteration += 1
        if np.all(np.abs(state.deficits) <= band):
            converged = True
            break
        state.multipliers = state.multipliers * np.exp(eta * state.deficits / denom)

    if not converged:
        print(f"{__name__}: allocation did not converge in {max_iter} iterations, "
              f"max |deficit| = {np.abs(state.deficits).max():.1f}")
    return AllocationResult(state.allocation, state.iteration, converged, state.deficits.copy(),
                            state.multipliers.copy())
