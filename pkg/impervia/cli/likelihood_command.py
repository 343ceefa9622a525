"""
likelihood_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
from typing import List

from ..errors import ConfigError
from ..raster.igrd_io import save_grid
from ..raster.lulc_legend import LulcLegend
from ..store.split_definition import conditioning_years
from ..transition.likelihood_map import likelihood_series
from ..transition.transition_tables import format_probs
from .argument_parser import add_common_arguments, keys_epilog
from .impervia_config import ImperviaConfig
from .workspace import Workspace, available_years, finish_run, land_cover_path, likelihood_path, load_years

KEYS = ("years", "target_years", "holdout_years", "cond_lag", "n_cond", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "likelihood", help="build imperviousness likelihood maps for the conditioning years of each target",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")
    parser.add_argument("--target", type=int, action="append",
                        help="target year (default: target_years and holdout_years)")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    data_dir = workspace.data_dir(args.data)
    run_dir = workspace.directory("likelihood")

    years = available_years(data_dir, "lc", config.years)
    if len(years) < 2:
        raise ConfigError(f"{__name__}: need land cover for at least 2 years in {data_dir}, found {years}")
    if config.n_cond < 2:
        raise ConfigError(f"{__name__}: likelihood maps need n_cond >= 2, got {config.n_cond}")
    targets = args.target or sorted(set(config.target_years) | set(config.holdout_years))

    # 目標年ごとに条件付け窓の LULC だけを使う. 窓より後の年は確率表に入れない.
    windows = {target: conditioning_years(years, target, config.cond_lag, config.n_cond) for target in targets}
    needed = sorted({y for window in windows.values() for y in window})
    inputs = [land_cover_path(data_dir, y) for y in needed]
    grids = load_years(dict(zip(needed, inputs)))

    legend = LulcLegend.nlcd16()
    outputs: List[str] = []
    for target, window in windows.items():
        maps = likelihood_series([grids[y] for y in window], legend)
        for year, lmap in zip(window, maps):
            path = likelihood_path(run_dir, target, year)
            save_grid(lmap.grid, path)
            outputs.append(path)
            if lmap.tables is not None and year != window[-1]:
                table_path = os.path.join(run_dir, f"probs_{target}_{year}_{window[lmap.source[1]]}.txt")
                with open(table_path, "w", encoding="utf-8") as stream:
                    stream.write(format_probs(lmap.tables.probs, legend))
                outputs.append(table_path)
        print(f"likelihood: target {target} from {list(window)}")

    finish_run("likelihood", config, run_dir, inputs=inputs, outputs=outputs)
    return 0
