"""
change_stats.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass

import numpy as np

from ..raster.grid import Grid
from ..raster.grid_ops import change_map


@dataclass(frozen=True)
class ChangeStats:
    mean: float  # [%pt]
    std: float  # [%pt]
    cells: int


def change_stats(before: Grid, after: Grid) -> ChangeStats:
    """AOI 全体の不浸透率の変化の平均と標準偏差."""
    diff = change_map(before, after)
    data = diff.values[diff.valid]
    if data.size == 0:
        return ChangeStats(0.0, 0.0, 0)
    return ChangeStats(float(data.mean()), float(data.std()), int(data.size))
