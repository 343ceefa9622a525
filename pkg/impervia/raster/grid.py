"""
grid.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import ClassIndexError, GridKindError, GridSchemaError, ShapeMismatchError


class GridKind(enum.IntEnum):
    """
    グリッドの種類. 値は IGRD ヘッダの kind バイトと一致させている.
    """

    CATEGORICAL = 0
    CONTINUOUS = 1


DEFAULT_NODATA_CONTINUOUS = -9999.0
DEFAULT_NODATA_CATEGORICAL = 255.0


@dataclass(frozen=True, eq=False)
class Grid:
    """
    2次元ラスタ. 全モジュールが受け渡しに使う.

    values は (height, width) の配列で, 連続値なら float64 (不浸透率 [%] や確率),
    カテゴリなら uint8 のクラス番号を持つ.
    nodata_mask が True の画素の値は意味を持たない (保存時は nodata_value で埋める).
    """

    values: npt.NDArray[np.generic]
    kind: GridKind
    pixel_size: float = 30.0  # [m/px]
    nodata_mask: Optional[npt.NDArray[np.bool_]] = None
    nodata_value: float = field(default=DEFAULT_NODATA_CONTINUOUS)

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if values.ndim != 2:
            raise ShapeMismatchError(f"{__name__}: grid values must be 2-D, got {values.shape=}")

        if self.kind == GridKind.CONTINUOUS:
            values = values.astype(np.float64, copy=False)
        else:
            if values.dtype.kind not in "iub":
                raise GridSchemaError(f"{__name__}: categorical grid needs integer values, got {values.dtype}")
            if values.size and (int(values.min()) < 0 or int(values.max()) > 255):
                raise ClassIndexError(f"{__name__}: categorical values must fit in 0..255")
            values = values.astype(np.uint8, copy=False)
            if self.nodata_value == DEFAULT_NODATA_CONTINUOUS:
                object.__setattr__(self, "nodata_value", DEFAULT_NODATA_CATEGORICAL)

        mask = self.nodata_mask
        if mask is None:
            mask = np.zeros(values.shape, dtype=bool)
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != values.shape:
            raise ShapeMismatchError(f"{__name__}: {mask.shape=} does not match {values.shape=}")

        if self.pixel_size <= 0:
            raise ValueError(f"{__name__}: pixel_size must be positive, got {self.pixel_size}")

        # frozen dataclass なので object.__setattr__ で正規化した値を入れる.
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "nodata_mask", mask)

    @property
    def width(self) -> int:
        """幅 [px]"""
        return int(self.values.shape[1])

    @property
    def height(self) -> int:
        """高さ [px]"""
        return int(self.values.shape[0])

    @property
    def shape(self) -> Tuple[int, int]:
        """(height, width)"""
        return (self.height, self.width)

    @property
    def mask(self) -> npt.NDArray[np.bool_]:
        """nodata_mask (None にならないことを型の上でも保証する)."""
        assert self.nodata_mask is not None
        return self.nodata_mask

    @property
    def valid(self) -> npt.NDArray[np.bool_]:
        """有効画素のマスク."""
        return ~self.mask

    @classmethod
    def continuous(
        cls,
        values: npt.ArrayLike,
        *,
        pixel_size: float = 30.0,
        nodata_mask: Optional[npt.ArrayLike] = None,
        nodata_value: float = DEFAULT_NODATA_CONTINUOUS,
        value_range: Optional[Tuple[float, float]] = (0.0, 100.0),
    ) -> "Grid":
        """
        連続値グリッドを作る. value_range を指定すると有効画素の値域を検査する.
        """
        arr = np.asarray(values, dtype=np.float64)
        mask = None if nodata_mask is None else np.asarray(nodata_mask, dtype=bool)
        grid = cls(arr, GridKind.CONTINUOUS, pixel_size, mask, nodata_value)
        if value_range is not None:
            grid.check_range(*value_range)
        return grid

    @classmethod
    def categorical(
        cls,
        values: npt.ArrayLike,
        *,
        pixel_size: float = 30.0,
        nodata_mask: Optional[npt.ArrayLike] = None,
        nodata_value: float = DEFAULT_NODATA_CATEGORICAL,
        class_count: Optional[int] = None,
    ) -> "Grid":
        """
        カテゴリグリッドを作る. class_count を指定するとクラス番号を検査する.
        """
        arr = np.asarray(values)
        mask = None if nodata_mask is None else np.asarray(nodata_mask, dtype=bool)
        grid = cls(arr, GridKind.CATEGORICAL, pixel_size, mask, nodata_value)
        if class_count is not None:
            grid.check_classes(class_count)
        return grid

    def check_range(self, low: float, high: float) -> None:
        """有効画素が low ~ high に収まっているかを調べる."""
        data = self.values[self.valid]
        if data.size == 0:
            return
        if not np.all(np.isfinite(data)) or data.min() < low or data.max() > high:
            raise ValueError(
                f"{__name__}: grid values outside [{low}, {high}]: "
                f"min={np.nanmin(data)}, max={np.nanmax(data)}"
            )

    def check_classes(self, class_count: int) -> None:
        """有効画素のクラス番号が class_count 未満かを調べる."""
        if self.kind != GridKind.CATEGORICAL:
            raise GridKindError(f"{__name__}: class check on a {self.kind.name} grid")
        data = self.values[self.valid]
        if data.size and int(data.max()) >= class_count:
            raise ClassIndexError(
                f"{__name__}: class index {int(data.max())} out of range for {class_count} classes"
            )

    def require_kind(self, kind: GridKind) -> None:
        """kind が一致しなければ GridKindError."""
        if self.kind != kind:
            raise GridKindError(f"{__name__}: expected a {kind.name} grid, got {self.kind.name}")

    def filled(self) -> npt.NDArray[np.generic]:
        """nodata 画素を nodata_value で埋めた配列を返す."""
        out = self.values.copy()
        if self.mask.any():
            if self.kind == GridKind.CATEGORICAL:
                out[self.mask] = np.uint8(int(self.nodata_value) & 0xFF)
            else:
                out[self.mask] = self.nodata_value
        return out

    def with_values(
        self,
        values: npt.ArrayLike,
        nodata_mask: Optional[npt.ArrayLike] = None,
        *,
        pixel_size: Optional[float] = None,
    ) -> "Grid":
        """同じ種類・メタデータで値だけ差し替えたグリッドを返す."""
        return Grid(
            np.asarray(values),
            self.kind,
            self.pixel_size if pixel_size is None else pixel_size,
            self.mask.copy() if nodata_mask is None else np.asarray(nodata_mask, dtype=bool),
            self.nodata_value,
        )

    def crop(self, row: int, col: int, height: int, width: int) -> "Grid":
        """部分領域を切り出す."""
        if row < 0 or col < 0 or row + height > self.height or col + width > self.width:
            raise ShapeMismatchError(
                f"{__name__}: crop ({row}, {col}, {height}, {width}) outside grid {self.shape}"
            )
        return Grid(
            self.values[row:row + height, col:col + width].copy(),
            self.kind,
            self.pixel_size,
            self.mask[row:row + height, col:col + width].copy(),
            self.nodata_value,
        )

    def same_shape(self, other: "Grid") -> None:
        """形が異なれば ShapeMismatchError."""
        if self.shape != other.shape:
            raise ShapeMismatchError(f"{__name__}: grid shapes differ, {self.shape} vs {other.shape}")

    def equals(self, other: "Grid") -> bool:
        """メタデータと有効画素の値がすべて等しいか."""
        if self.kind != other.kind or self.shape != other.shape:
            return False
        if self.pixel_size != other.pixel_size or not np.array_equal(self.mask, other.mask):
            return False
        return bool(np.array_equal(self.values[self.valid], other.values[other.valid]))
