"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .grid import Grid, GridKind
from .grid_ops import aggregate, change_map
from .igrd_io import load_grid, save_grid
from .lulc_legend import CA8_DEVELOPED, CA8_NAMES, LulcLegend, to_ca_classes
from .synthetic_series import SyntheticSeries, ToySample, generate_series, make_toy_task
from .tile_set import TileSet, tile, tile_id, write_tile_index
from .geotiff_converter import convert_geotiff

__all__ = [
    "Grid",
    "GridKind",
    "aggregate",
    "change_map",
    "load_grid",
    "save_grid",
    "CA8_DEVELOPED",
    "CA8_NAMES",
    "LulcLegend",
    "to_ca_classes",
    "SyntheticSeries",
    "ToySample",
    "generate_series",
    "make_toy_task",
    "TileSet",
    "tile",
    "tile_id",
    "write_tile_index",
    "convert_geotiff",
]
