"""
ca_forecast_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
from typing import List, Optional

from ..camarkov.ca_forecast import ca_forecast
from ..camarkov.imperv_change import imperv_change_binary
from ..camarkov.markov_model import format_matrix
from ..errors import ConfigError
from ..raster.igrd_io import save_grid
from ..raster.lulc_legend import CA8_NAMES, to_ca_classes
from .argument_parser import add_common_arguments, keys_epilog
from .impervia_config import ImperviaConfig
from .workspace import Workspace, available_years, finish_run, land_cover_path, load_years

KEYS = ("ca_window", "ca_eta", "ca_tolerance", "ca_max_iter", "ca_floor", "years", "holdout_years", "cond_lag",
        "out")


def default_years(years: List[int], config: ImperviaConfig) -> Optional[List[int]]:
    """
    最初の評価年から cond_lag 年前までの最新の年を終点とし, さらに cond_lag 年前までの最新の年を始点とする.
    """
    if not config.holdout_years:
        return None
    end = [y for y in years if y <= min(config.holdout_years) - config.cond_lag]
    if not end:
        return None
    start = [y for y in years if y <= end[-1] - config.cond_lag]
    if not start:
        return None
    return [start[-1], end[-1]]


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "ca-forecast", help="CA-Markov baseline: project 8-class land cover one step ahead",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")
    parser.add_argument("--from", dest="from_year", type=int, help="first land cover year (e.g. 2001)")
    parser.add_argument("--to", dest="to_year", type=int, help="second land cover year (e.g. 2011)")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    data_dir = workspace.data_dir(args.data)
    run_dir = workspace.directory("ca-forecast")

    years = available_years(data_dir, "lc", config.years)
    pair = default_years(years, config) or []
    from_year = args.from_year if args.from_year is not None else (pair[0] if pair else None)
    to_year = args.to_year if args.to_year is not None else (pair[1] if pair else None)
    if from_year is None or to_year is None:
        raise ConfigError(f"{__name__}: cannot choose --from/--to from land cover years {years}")
    if from_year >= to_year:
        raise ConfigError(f"{__name__}: --from {from_year} must be before --to {to_year}")
    target = to_year + (to_year - from_year)

    inputs = [land_cover_path(data_dir, from_year), land_cover_path(data_dir, to_year)]
    grids = load_years({from_year: inputs[0], to_year: inputs[1]})
    lc_a = to_ca_classes(grids[from_year])
    lc_b = to_ca_classes(grids[to_year])
    forecast = ca_forecast(lc_a, lc_b, config.ca_param(), show_progress=True)

    forecast_path = os.path.join(run_dir, f"ca_{target}.igrd")
    change_path = os.path.join(run_dir, f"change_{target}.igrd")
    matrix_path = os.path.join(run_dir, "transition.txt")
    save_grid(forecast.result.grid, forecast_path)
    save_grid(imperv_change_binary(lc_b, forecast.result.grid), change_path)
    with open(matrix_path, "w", encoding="utf-8") as stream:
        stream.write(f"# {from_year} -> {to_year}\n")
        stream.write(format_matrix(forecast.model.transition, CA8_NAMES))

    print(f"ca-forecast: {from_year} -> {to_year} -> {target}, "
          f"iterations={forecast.result.iterations} converged={str(forecast.result.converged).lower()}")
    finish_run("ca-forecast", config, run_dir, inputs=inputs, outputs=[forecast_path, change_path, matrix_path])
    return 0
