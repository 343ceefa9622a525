"""
ingest_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
from typing import Dict, List, Sequence

import numpy as np

from ..errors import ConfigError
from ..raster.grid import Grid
from ..raster.igrd_io import save_grid
from ..raster.lulc_legend import LulcLegend
from ..raster.synthetic_series import generate_series
from ..raster.tile_set import write_tile_index
from .argument_parser import add_common_arguments, keys_epilog
from .impervia_config import ImperviaConfig
from .workspace import Workspace, finish_run, imperviousness_path, land_cover_path, tiles_for

KEYS = ("years", "pixel_size", "patch_side", "seed", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "ingest", help="convert .npy rasters (or a synthetic series) to IGRD grids and a tile index",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--imperviousness", action="append", default=[], metavar="YEAR=PATH",
                        help="imperviousness [%%] raster as .npy, NaN for nodata")
    parser.add_argument("--land-cover", action="append", default=[], metavar="YEAR=PATH",
                        help="land cover raster as .npy (NLCD codes unless --class-indices)")
    parser.add_argument("--class-indices", action="store_true",
                        help="land cover rasters already hold class indices 0..15 (255 = nodata)")
    parser.add_argument("--synthetic", action="store_true", help="generate a synthetic series instead")
    parser.add_argument("--size", type=int, default=128, help="side of the synthetic grid [px]")


def _parse_pairs(items: Sequence[str], flag: str) -> Dict[int, str]:
    pairs: Dict[int, str] = {}
    for item in items:
        year, sep, path = item.partition("=")
        if not sep or not year.strip().isdigit():
            raise ConfigError(f"{__name__}: {flag} expects YEAR=PATH, got {item!r}")
        pairs[int(year)] = path
    return pairs


def _load_imperviousness(path: str, pixel_size: float) -> Grid:
    values = np.load(path).astype(np.float64)
    mask = ~np.isfinite(values)
    return Grid.continuous(np.where(mask, 0.0, values), pixel_size=pixel_size, nodata_mask=mask)


def _load_land_cover(path: str, pixel_size: float, class_indices: bool) -> Grid:
    legend = LulcLegend.nlcd16()
    values = np.load(path)
    if class_indices:
        mask = values == 255
        return Grid.categorical(np.where(mask, 0, values).astype(np.uint8), pixel_size=pixel_size,
                                nodata_mask=mask, class_count=legend.class_count)
    return legend.from_codes(values, pixel_size=pixel_size)


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    run_dir = workspace.directory("ingest")
    inputs: List[str] = []

    if args.synthetic:
        series = generate_series((args.size, args.size), config.years, seed=config.seed,
                                 pixel_size=config.pixel_size)
        imperviousness, land_cover = series.imperviousness, series.land_cover
    else:
        imp_paths = _parse_pairs(args.imperviousness, "--imperviousness")
        lc_paths = _parse_pairs(args.land_cover, "--land-cover")
        if not imp_paths:
            raise ConfigError(f"{__name__}: give --imperviousness YEAR=PATH or --synthetic")
        imperviousness = {y: _load_imperviousness(p, config.pixel_size) for y, p in imp_paths.items()}
        land_cover = {y: _load_land_cover(p, config.pixel_size, args.class_indices) for y, p in lc_paths.items()}
        inputs = list(imp_paths.values()) + list(lc_paths.values())

    outputs: List[str] = []
    for year, grid in sorted(imperviousness.items()):
        path = imperviousness_path(run_dir, year)
        save_grid(grid, path)
        outputs.append(path)
    for year, grid in sorted(land_cover.items()):
        path = land_cover_path(run_dir, year)
        save_grid(grid, path)
        outputs.append(path)

    first = imperviousness[min(imperviousness)]
    tiles = tiles_for(first, config)
    index_path = os.path.join(run_dir, "tiles.csv")
    write_tile_index(tiles, index_path)
    outputs.append(index_path)

    print(f"ingest: {len(imperviousness)} imperviousness grids, {len(land_cover)} land cover grids, "
          f"{len(tiles)} tiles of {config.patch_side} px")
    finish_run("ingest", config, run_dir, inputs=inputs, outputs=outputs)
    return 0
