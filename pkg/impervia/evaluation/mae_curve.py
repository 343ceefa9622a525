"""
mae_curve.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import csv
import os
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from ..raster.grid import Grid, GridKind
from ..raster.grid_ops import aggregate

DEFAULT_CELLS = (4, 8, 16, 32, 64, 128)


@dataclass(frozen=True)
class MaeCurve:
    """
    解像度ごとの MAE. scales は km で昇順.
    """

    scales: npt.NDArray[np.float64]
    values: npt.NDArray[np.float64]
    cells: Tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        scales = np.asarray(self.scales, dtype=np.float64).reshape(-1)
        values = np.asarray(self.values, dtype=np.float64).reshape(-1)
        if scales.shape != values.shape:
            raise ValueError(f"{__name__}: {scales.shape=} != {values.shape=}")
        if scales.size > 1 and np.any(np.diff(scales) <= 0):
            raise ValueError(f"{__name__}: scales must be strictly increasing, got {scales}")
        if np.any(values < 0):
            raise ValueError(f"{__name__}: MAE values must be non-negative")
        object.__setattr__(self, "scales", scales)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.scales.size)

    def shifted(self, offset: float) -> "MaeCurve":
        """全点に offset を足した曲線."""
        return MaeCurve(self.scales, self.values + offset, self.cells)


def null_forecast(past: Grid) -> Grid:
    """変化なしを仮定した予測. past と同じ内容のグリッド."""
    return past.with_values(past.values.copy())


def mae(pred: Grid, truth: Grid, mask: Optional[npt.NDArray[np.bool_]] = None) -> float:
    """両方で有効な画素の平均絶対誤差. 有効画素がなければ nan."""
    pred.require_kind(GridKind.CONTINUOUS)
    truth.require_kind(GridKind.CONTINUOUS)
    pred.same_shape(truth)
    valid = pred.valid & truth.valid
    if mask is not None:
        valid &= mask
    if not valid.any():
        return float("nan")
    return float(np.abs(pred.values[valid] - truth.values[valid]).mean())


def mae_curve(
    pred: Grid,
    truth: Grid,
    cells: Sequence[int] = DEFAULT_CELLS,
    mask: Optional[npt.NDArray[np.bool_]] = None,
) -> MaeCurve:
    """
    各セルサイズ S でブロック平均をとってから MAE を計算する.
    mask を与えると True の画素だけを使う (クラスタ別の評価など).

    Parameters
    ----------
    cells : Sequence[int]
        ブロックの一辺 [px]. 昇順で, グリッドの縦横を割り切ること.

    Returns
    -------
    curve : MaeCurve
        scales は S * pixel_size / 1000 [km].
    """
    pred.same_shape(truth)
    if mask is not None:
        mask = np.asarray(mask, dtype=bool)
        pred = pred.with_values(pred.values, pred.mask | ~mask)
        truth = truth.with_values(truth.values, truth.mask | ~mask)
    joint = pred.mask | truth.mask
    pred = pred.with_values(pred.values, joint)
    truth = truth.with_values(truth.values, joint)

    values: List[float] = []
    for cell in cells:
        values.append(mae(aggregate(pred, cell), aggregate(truth, cell)))
    scales = np.asarray(cells, dtype=np.float64) * pred.pixel_size / 1000.0
    return MaeCurve(scales, np.asarray(values), tuple(int(c) for c in cells))


def write_curves_csv(path: str, model: MaeCurve, null: MaeCurve) -> None:
    """resolution_km,model_mae,null_mae の CSV を書く."""
    if not np.allclose(model.scales, null.scales):
        raise ValueError(f"{__name__}: model and null curves have different scales")
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as stream:
        writer = csv.writer(stream)
        writer.writerow(["resolution_km", "model_mae", "null_mae"])
        for s, m, n in zip(model.scales, model.values, null.values):
            writer.writerow([f"{s:.9g}", f"{m:.9g}", f"{n:.9g}"])


def read_curves_csv(path: str) -> Tuple[MaeCurve, MaeCurve]:
    with open(path, newline="", encoding="utf-8") as stream:
        reader = csv.DictReader(stream)
        if reader.fieldnames != ["resolution_km", "model_mae", "null_mae"]:
            raise ValueError(f"{__name__}: {path} is not a curve CSV")
        rows = [(float(r["resolution_km"]), float(r["model_mae"]), float(r["null_mae"])) for r in reader]
    arr = np.asarray(rows, dtype=np.float64).reshape(-1, 3)
    return MaeCurve(arr[:, 0], arr[:, 1]), MaeCurve(arr[:, 0], arr[:, 2])
