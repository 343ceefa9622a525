"""
lulc_legend.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np
import numpy.typing as npt

from .grid import Grid, GridKind


@dataclass(frozen=True)
class LulcLegend:
    """
    土地被覆 (LULC) の凡例.
    developed_weights は開発地クラスにだけ設定する不浸透率の上限値 (0, 1].
    """

    names: Tuple[str, ...]
    developed_weights: Tuple[Optional[float], ...]
    codes: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.names) != len(self.developed_weights):
            raise ValueError(
                f"{__name__}: {len(self.names)=} != {len(self.developed_weights)=}"
            )
        if self.codes and len(self.codes) != len(self.names):
            raise ValueError(f"{__name__}: {len(self.codes)=} != {len(self.names)=}")
        for name, weight in zip(self.names, self.developed_weights):
            if weight is not None and not 0.0 < weight <= 1.0:
                raise ValueError(f"{__name__}: developed weight of {name} must be in (0, 1], got {weight}")

    @property
    def class_count(self) -> int:
        """クラス数 C"""
        return len(self.names)

    @property
    def pervious_flags(self) -> npt.NDArray[np.bool_]:
        """開発地でないクラスは True."""
        return np.array([w is None for w in self.developed_weights], dtype=bool)

    @property
    def weight_vector(self) -> npt.NDArray[np.float64]:
        """開発地の重み. 透水性クラスは 0."""
        return np.array([0.0 if w is None else w for w in self.developed_weights], dtype=np.float64)

    @classmethod
    def nlcd16(cls) -> "LulcLegend":
        """
        NLCD の 16 クラス凡例.
        開発地の重みは不浸透率区分の上限 (20%, 49%, 79%, 100%).
        """
        return cls(names=NLCD16_NAMES, developed_weights=NLCD16_WEIGHTS, codes=NLCD16_CODES)

    def from_codes(self, codes: npt.ArrayLike, *, pixel_size: float = 30.0) -> Grid:
        """
        NLCD のクラスコード (11, 21, ...) の配列をクラス番号のグリッドに変換する.
        凡例にないコードは nodata.
        """
        if not self.codes:
            raise ValueError(f"{__name__}: legend has no class codes")
        raw = np.asarray(codes).astype(np.int64)
        lookup = np.full(256, -1, dtype=np.int64)
        for index, code in enumerate(self.codes):
            lookup[code] = index
        inside = (raw >= 0) & (raw < 256)
        index_map = np.full(raw.shape, -1, dtype=np.int64)
        index_map[inside] = lookup[raw[inside]]
        mask = index_map < 0
        index_map[mask] = 0
        return Grid.categorical(index_map.astype(np.uint8), pixel_size=pixel_size, nodata_mask=mask)


NLCD16_NAMES: Tuple[str, ...] = (
    "Open Water",
    "Perennial Ice/Snow",
    "Developed, Open Space",
    "Developed, Low Intensity",
    "Developed, Medium Intensity",
    "Developed, High Intensity",
    "Barren Land",
    "Deciduous Forest",
    "Evergreen Forest",
    "Mixed Forest",
    "Shrub/Scrub",
    "Grassland/Herbaceous",
    "Pasture/Hay",
    "Cultivated Crops",
    "Woody Wetlands",
    "Emergent Herbaceous Wetlands",
)

NLCD16_CODES: Tuple[int, ...] = (11, 12, 21, 22, 23, 24, 31, 41, 42, 43, 52, 71, 81, 82, 90, 95)

# 開発地 4 クラスのみ重みを持つ.
NLCD16_WEIGHTS: Tuple[Optional[float], ...] = (
    None, None, 0.20, 0.49, 0.79, 1.00, None, None,
    None, None, None, None, None, None, None, None,
)

# CA-Markov で使う 8 クラス.
CA8_NAMES: Tuple[str, ...] = (
    "Water",
    "Developed",
    "Barren",
    "Forest",
    "Shrubland",
    "Herbaceous",
    "Cultivated",
    "Wetlands",
)

CA8_DEVELOPED = 1

# NLCD16 のクラス番号 -> CA8 のクラス番号.
NLCD16_TO_CA8: Dict[int, int] = {
    0: 0, 1: 0,
    2: 1, 3: 1, 4: 1, 5: 1,
    6: 2,
    7: 3, 8: 3, 9: 3,
    10: 4,
    11: 5,
    12: 6, 13: 6,
    14: 7, 15: 7,
}


def to_ca_classes(grid: Grid) -> Grid:
    """
    16 クラスの LULC グリッドを CA-Markov 用の 8 クラスに変換する.
    """
    grid.require_kind(GridKind.CATEGORICAL)
    grid.check_classes(len(NLCD16_NAMES))
    lookup = np.array([NLCD16_TO_CA8[i] for i in range(len(NLCD16_NAMES))], dtype=np.uint8)
    values = lookup[grid.values]
    return grid.with_values(values)
