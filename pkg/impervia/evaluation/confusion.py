"""
confusion.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass

import numpy as np

from ..raster.grid import Grid, GridKind


@dataclass(frozen=True)
class ConfusionCounts:
    """2値の変化の混同行列. precision, recall, f1 は % で小数第2位まで."""

    tp: int
    fp: int
    fn: int
    tn: int
    precision: float
    recall: float
    f1: float
    degenerate: bool = False

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


def confusion_from_counts(tp: int, fp: int, fn: int, tn: int = 0) -> ConfusionCounts:
    """
    カウントから指標を求める. 分母が 0 の指標は 0 とし degenerate を立てる.
    """
    if min(tp, fp, fn, tn) < 0:
        raise ValueError(f"{__name__}: confusion counts must be non-negative")
    degenerate = False
    if tp + fp > 0:
        precision = tp / (tp + fp)
    else:
        precision, degenerate = 0.0, True
    if tp + fn > 0:
        recall = tp / (tp + fn)
    else:
        recall, degenerate = 0.0, True
    if precision + recall > 0:
        f1 = 2.0 * precision * recall / (precision + recall)
    else:
        f1, degenerate = 0.0, True
    return ConfusionCounts(
        tp, fp, fn, tn,
        round(100.0 * precision, 2),
        round(100.0 * recall, 2),
        round(100.0 * f1, 2),
        degenerate,
    )


def confusion(pred_change: Grid, true_change: Grid) -> ConfusionCounts:
    """両方で有効な画素について 2x2 の混同行列をとる. 0 以外の値を変化ありとみなす."""
    pred_change.same_shape(true_change)
    valid = pred_change.valid & true_change.valid
    pred = pred_change.values[valid] != 0
    truth = true_change.values[valid] != 0
    tp = int(np.count_nonzero(pred & truth))
    fp = int(np.count_nonzero(pred & ~truth))
    fn = int(np.count_nonzero(~pred & truth))
    tn = int(np.count_nonzero(~pred & ~truth))
    counts = confusion_from_counts(tp, fp, fn, tn)
    if counts.degenerate:
        print(f"{__name__}: degenerate confusion matrix ({tp = }, {fp = }, {fn = })")
    return counts


def change_mask(before: Grid, after: Grid) -> Grid:
    """不浸透率が増えた (after - before > 0) 画素を 1 とする 0/1 のカテゴリグリッド."""
    before.require_kind(GridKind.CONTINUOUS)
    after.require_kind(GridKind.CONTINUOUS)
    before.same_shape(after)
    mask = before.mask | after.mask
    changed = (after.values - before.values > 0) & ~mask
    return Grid.categorical(changed.astype(np.uint8), pixel_size=after.pixel_size, nodata_mask=mask)
