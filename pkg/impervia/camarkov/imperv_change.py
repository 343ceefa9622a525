"""
imperv_change.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np

from ..raster.grid import Grid, GridKind
from ..raster.lulc_legend import CA8_DEVELOPED


def imperv_change_binary(before: Grid, after: Grid, developed: int = CA8_DEVELOPED) -> Grid:
    """
    Developed 以外から Developed に変わった画素を 1 とする 0/1 のカテゴリグリッド.
    """
    before.require_kind(GridKind.CATEGORICAL)
    after.require_kind(GridKind.CATEGORICAL)
    before.same_shape(after)
    changed = (after.values == developed) & (before.values != developed)
    mask = before.mask | after.mask
    return Grid.categorical(
        (changed & ~mask).astype(np.uint8),
        pixel_size=after.pixel_size,
        nodata_mask=mask,
    )
