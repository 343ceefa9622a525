"""
tile_set.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from ..errors import ShapeMismatchError
from .grid import Grid


@dataclass(frozen=True)
class TileSet:
    """
    親グリッドを重なりなく分割したタイルの一覧.
    左上を基準に side で割り切れる領域だけを覆い, 余りの画素は margin として報告する.
    """

    parent_shape: Tuple[int, int]  # (height, width)
    side: int
    origins: Tuple[Tuple[int, int], ...]  # (row, col)
    nodata_fractions: Tuple[float, ...]
    margin_rows: int
    margin_cols: int
    status: str = "ok"
    parent_id: str = ""

    def __len__(self) -> int:
        return len(self.origins)

    @property
    def tile_rows(self) -> int:
        """タイルの行数."""
        return self.parent_shape[0] // self.side

    @property
    def tile_cols(self) -> int:
        """タイルの列数."""
        return self.parent_shape[1] // self.side

    def crop(self, grid: Grid, index: int) -> Grid:
        """
        タイル番号 index の領域を grid から切り出す.
        grid は親グリッドと同じ大きさであること.
        """
        if grid.shape != self.parent_shape:
            raise ShapeMismatchError(f"{__name__}: {grid.shape=} does not match {self.parent_shape=}")
        row, col = self.origins[index]
        return grid.crop(row, col, self.side, self.side)

    def iter_tiles(self, grid: Grid) -> Iterator[Tuple[int, Grid]]:
        """(タイル番号, タイル) を順に返す."""
        for index in range(len(self.origins)):
            yield index, self.crop(grid, index)

    def stitch(self, tiles: Sequence[Grid], template: Grid) -> Grid:
        """
        タイルを親グリッドの大きさに貼り戻す. タイルに覆われない画素は nodata.
        template からメタデータ (種類, 画素サイズ, nodata_value) を引き継ぐ.
        """
        if len(tiles) != len(self.origins):
            raise ShapeMismatchError(f"{__name__}: {len(tiles)=} != {len(self.origins)=}")
        values = np.zeros(self.parent_shape, dtype=template.values.dtype)
        mask = np.ones(self.parent_shape, dtype=bool)
        for (row, col), tile_grid in zip(self.origins, tiles):
            if tile_grid.shape != (self.side, self.side):
                raise ShapeMismatchError(f"{__name__}: tile shape {tile_grid.shape} != side {self.side}")
            values[row:row + self.side, col:col + self.side] = tile_grid.values
            mask[row:row + self.side, col:col + self.side] = tile_grid.mask
        return template.with_values(values, mask)


def tile(grid: Grid, side: int = 128, *, parent_id: str = "") -> TileSet:
    """
    グリッドを side x side のタイルに分割する.

    Parameters
    ----------
    grid : Grid
        分割するグリッド.
    side : int
        タイルの一辺 [px].

    Returns
    -------
    tiles : TileSet
        タイル一覧. side がグリッドより大きい場合は空で status="empty".
    """
    if side < 1:
        raise ValueError(f"{__name__}: side must be >= 1, got {side}")

    rows = grid.height // side
    cols = grid.width // side
    margin_rows = grid.height - rows * side
    margin_cols = grid.width - cols * side

    if rows == 0 or cols == 0:
        print(f"{__name__}: warning: {side=} is larger than grid {grid.shape}, no tiles")
        return TileSet(grid.shape, side, (), (), margin_rows, margin_cols, "empty", parent_id)

    origins: List[Tuple[int, int]] = []
    fractions: List[float] = []
    for r in range(rows):
        for c in range(cols):
            row, col = r * side, c * side
            origins.append((row, col))
            fractions.append(float(grid.mask[row:row + side, col:col + side].mean()))

    if margin_rows or margin_cols:
        print(f"{__name__}: {margin_rows=} {margin_cols=} pixels are excluded from tiling")

    return TileSet(grid.shape, side, tuple(origins), tuple(fractions), margin_rows, margin_cols, "ok", parent_id)


def write_tile_index(tiles: TileSet, path: str) -> None:
    """タイル一覧を tile_id,row,col,nodata_fraction の CSV にする."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    lines = [f"# parent={tiles.parent_id} shape={tiles.parent_shape[0]}x{tiles.parent_shape[1]} "
             f"side={tiles.side} status={tiles.status}", "tile_id,row,col,nodata_fraction"]
    for index, ((row, col), frac) in enumerate(zip(tiles.origins, tiles.nodata_fractions)):
        lines.append(f"{tile_id(index)},{row},{col},{frac:.6f}")
    with open(path, "w", encoding="utf-8") as stream:
        stream.write("\n".join(lines) + "\n")


def tile_id(index: int) -> str:
    """タイル番号から patch id を作る."""
    return f"t{index:04d}"
