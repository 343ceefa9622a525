"""
seed_stats.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Sequence, Tuple

import numpy as np

from ..raster.grid import Grid, GridKind


def seed_stats(preds: Sequence[Grid]) -> Tuple[Grid, Grid]:
    """
    複数シードの予測の画素ごとの平均と母標準偏差.
    どれかで nodata の画素は nodata.
    """
    if not preds:
        raise ValueError(f"{__name__}: seed_stats needs at least one prediction")
    first = preds[0]
    for p in preds:
        p.require_kind(GridKind.CONTINUOUS)
        first.same_shape(p)

    stack = np.stack([p.values for p in preds])
    mask = np.logical_or.reduce([p.mask for p in preds])
    mean = np.where(mask, first.nodata_value, stack.mean(axis=0))
    std = np.where(mask, first.nodata_value, stack.std(axis=0))
    return first.with_values(mean, mask), first.with_values(std, mask)
