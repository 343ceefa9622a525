"""
workspace.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import glob
import os
from typing import Dict, List, Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..raster.grid import Grid
from ..raster.igrd_io import load_grid
from ..raster.tile_set import TileSet, tile
from ..store.run_manifest import MANIFEST_NAME, RunManifest, write_manifest
from .impervia_config import ImperviaConfig


class Workspace:
    """
    出力ルートの下のディレクトリ構成. サブコマンドごとに 1 ディレクトリを使う.

    <out>/ingest/imp_<year>.igrd, lc_<year>.igrd, tiles.csv
    <out>/likelihood/lik_<target>_<year>.igrd, probs_<target>_<year>_<next>.txt (目標年ごとの条件付け窓)
    <out>/cluster/assignments.csv, weights.csv, signatures.csv, medoids.csv
    <out>/train/model.idnp, loss.csv (専用モデルは model_<LABEL>.idnp, loss_<LABEL>.csv)
    <out>/sample/pred_<year>_s<k>.igrd
    <out>/ca-forecast/ca_<year>.igrd, change_<year>.igrd, transition.txt
    <out>/evaluate/report.txt, curves.csv
    <out>/plot/curves.csv, mae_curve.svg
    """

    def __init__(self, root: str) -> None:
        self.root = root

    def directory(self, command: str) -> str:
        path = os.path.join(self.root, command)
        os.makedirs(path, exist_ok=True)
        return path

    def data_dir(self, override: Optional[str] = None) -> str:
        return override or os.path.join(self.root, "ingest")

    def likelihood_dir(self, override: Optional[str] = None) -> str:
        return override or os.path.join(self.root, "likelihood")


def imperviousness_path(directory: str, year: int) -> str:
    return os.path.join(directory, f"imp_{year}.igrd")


def land_cover_path(directory: str, year: int) -> str:
    return os.path.join(directory, f"lc_{year}.igrd")


def likelihood_path(directory: str, target: int, year: int) -> str:
    """目標年 target の条件付け窓の中で作った year の尤度マップ."""
    return os.path.join(directory, f"lik_{target}_{year}.igrd")


def prediction_path(directory: str, year: int, seed_index: int) -> str:
    return os.path.join(directory, f"pred_{year}_s{seed_index}.igrd")


def prediction_paths(directory: str, year: int) -> List[str]:
    return sorted(glob.glob(os.path.join(directory, f"pred_{year}_s*.igrd")))


def available_years(directory: str, prefix: str, years: Sequence[int]) -> List[int]:
    """years のうち directory に <prefix>_<year>.igrd があるもの."""
    return [y for y in years if os.path.exists(os.path.join(directory, f"{prefix}_{y}.igrd"))]


def load_years(paths: Dict[int, str]) -> Dict[int, Grid]:
    missing = [p for p in paths.values() if not os.path.exists(p)]
    if missing:
        raise FileNotFoundError(f"{__name__}: missing input grids: {', '.join(missing)}")
    return {year: load_grid(path) for year, path in paths.items()}


def tiles_for(grid: Grid, config: ImperviaConfig) -> TileSet:
    return tile(grid, config.patch_side, parent_id="aoi")


def filled_percent(grid: Grid) -> npt.NDArray[np.float64]:
    """nodata を 0 % とした不浸透率."""
    return np.where(grid.valid, grid.values, 0.0)


def finish_run(
    command: str,
    config: ImperviaConfig,
    run_dir: str,
    *,
    inputs: Sequence[str] = (),
    outputs: Sequence[str] = (),
    seeds: Optional[Sequence[int]] = None,
) -> str:
    """run.manifest を書き, そのパスを返す."""
    manifest = RunManifest.create(
        command,
        config.snapshot(),
        list(seeds) if seeds is not None else [config.seed],
        inputs=inputs,
        outputs=outputs,
        base_dir=run_dir,
    )
    path = os.path.join(run_dir, MANIFEST_NAME)
    write_manifest(manifest, path)
    print(f"{__name__}: run {manifest.run_id} -> {path}")
    return path
