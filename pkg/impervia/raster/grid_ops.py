"""
grid_ops.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np

from ..errors import GridDimensionError
from .grid import Grid, GridKind


def aggregate(grid: Grid, cell: int) -> Grid:
    """
    cell x cell のブロックごとに有効画素の平均をとり, 粗いグリッドを作る.
    ブロック内がすべて nodata なら出力も nodata.

    Parameters
    ----------
    grid : Grid
        連続値グリッド.
    cell : int
        ブロックの一辺 [px]. グリッドの縦横を割り切ること.

    Returns
    -------
    res : Grid
        画素サイズが pixel_size * cell のグリッド.
    """
    grid.require_kind(GridKind.CONTINUOUS)
    if cell < 1 or grid.height % cell or grid.width % cell:
        raise GridDimensionError(f"{__name__}: {cell=} does not divide grid {grid.shape}")

    if cell == 1:
        return grid.with_values(grid.values.copy())

    h, w = grid.height // cell, grid.width // cell
    valid = grid.valid
    # nodata 画素は 0 として和をとり, 有効画素数で割る.
    data = np.where(valid, grid.values, 0.0)
    sums = data.reshape(h, cell, w, cell).sum(axis=(1, 3))
    counts = valid.reshape(h, cell, w, cell).sum(axis=(1, 3))

    empty = counts == 0
    means = np.divide(sums, counts, out=np.zeros_like(sums), where=~empty)
    means[empty] = grid.nodata_value
    return Grid(means, GridKind.CONTINUOUS, grid.pixel_size * cell, empty, grid.nodata_value)


def change_map(before: Grid, after: Grid) -> Grid:
    """
    画素ごとの差分 after - before [%] を返す. どちらかが nodata なら nodata.
    """
    before.require_kind(GridKind.CONTINUOUS)
    after.require_kind(GridKind.CONTINUOUS)
    before.same_shape(after)

    mask = before.mask | after.mask
    diff = np.where(mask, before.nodata_value, after.values - before.values)
    return Grid(diff, GridKind.CONTINUOUS, before.pixel_size, mask, before.nodata_value)
