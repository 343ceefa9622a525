"""
forecast_inputs.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..clustering.cluster_io import read_assignments
from ..denoiser.conditioning_stack import ConditioningStack
from ..errors import ConfigError
from ..raster.grid import Grid
from ..raster.tile_set import TileSet, tile_id
from ..store.split_definition import conditioning_years
from .impervia_config import ImperviaConfig
from .workspace import (
    Workspace,
    available_years,
    imperviousness_path,
    likelihood_path,
    load_years,
)


@dataclass
class ForecastInputs:
    """
    年ごとの不浸透率と, 目標年ごとの条件付け窓で作った尤度マップ.
    likelihood[target][year] は target の窓の LULC だけから作ったもの.
    """

    years: List[int]
    imperviousness: Dict[int, Grid]
    windows: Dict[int, Tuple[int, ...]]
    likelihood: Dict[int, Dict[int, Grid]]
    paths: List[str]

    def stack(self, tiles: TileSet, index: int, target: int) -> ConditioningStack:
        """目標年 target に対するタイル index の条件付け."""
        if target not in self.windows:
            raise ConfigError(f"{__name__}: no likelihood maps were loaded for target {target}")
        cond_years = self.windows[target]
        return ConditioningStack.from_grids(
            [tiles.crop(self.imperviousness[y], index) for y in cond_years],
            [tiles.crop(self.likelihood[target][y], index) for y in cond_years],
            cond_years,
        )


def load_inputs(
    workspace: Workspace,
    config: ImperviaConfig,
    targets: Sequence[int],
    data: Optional[str] = None,
    likelihood: Optional[str] = None,
) -> ForecastInputs:
    """不浸透率と, targets の条件付け窓の尤度マップを読む."""
    data_dir = workspace.data_dir(data)
    lik_dir = workspace.likelihood_dir(likelihood)
    years = available_years(data_dir, "imp", config.years)
    if not years:
        raise ConfigError(f"{__name__}: no imp_*.igrd in {data_dir}")
    windows = {t: conditioning_years(years, t, config.cond_lag, config.n_cond) for t in targets}
    lik_paths = {t: {y: likelihood_path(lik_dir, t, y) for y in w} for t, w in windows.items()}
    missing = [p for paths in lik_paths.values() for p in paths.values() if not os.path.exists(p)]
    if missing:
        raise ConfigError(f"{__name__}: missing likelihood maps (run impervia likelihood): {', '.join(missing)}")

    imp_paths = {y: imperviousness_path(data_dir, y) for y in years}
    paths = list(imp_paths.values()) + [p for t in windows for p in lik_paths[t].values()]
    return ForecastInputs(years, load_years(imp_paths), windows,
                          {t: load_years(lik_paths[t]) for t in windows}, paths)


def tile_labels(path: str) -> Dict[str, str]:
    """割り当て CSV から tile id -> クラスタのラベル."""
    return {patch_id: label for patch_id, label, _ in read_assignments(path)}


def tiles_with_label(tiles: TileSet, labels: Dict[str, str], label: str) -> List[int]:
    chosen = [i for i in range(len(tiles)) if labels.get(tile_id(i)) == label]
    if not chosen:
        raise ConfigError(f"{__name__}: no tile is assigned to cluster {label!r}")
    return chosen


def tile_mask(tiles: TileSet, indices: Sequence[int]) -> np.ndarray:
    """指定したタイルが覆う画素を True にしたマスク."""
    mask = np.zeros(tiles.parent_shape, dtype=bool)
    for index in indices:
        row, col = tiles.origins[index]
        mask[row:row + tiles.side, col:col + tiles.side] = True
    return mask


PERSIST = "persist"
DEFAULT_MODEL = ""


def parse_checkpoints(values: Sequence[str]) -> Dict[str, str]:
    """
    --checkpoint の値を読む. "PATH" は全タイル向けのモデル, "LABEL=PATH" はクラスタ LABEL の専用モデル.

    Returns
    -------
    checkpoints : dict
        ラベル -> パス. 全タイル向けのモデルのラベルは DEFAULT_MODEL ("").
    """
    checkpoints: Dict[str, str] = {}
    for value in values:
        label, sep, path = value.partition("=")
        if not sep:
            label, path = DEFAULT_MODEL, value
        label = label.strip()
        if not path or label == PERSIST:
            raise ConfigError(f"{__name__}: bad checkpoint {value!r}, expected PATH or LABEL=PATH")
        if label in checkpoints:
            raise ConfigError(f"{__name__}: checkpoint for {label or 'all tiles'!r} given twice")
        checkpoints[label] = path
    return checkpoints


def route_tiles(
    labels: Sequence[Optional[str]],
    checkpoints: Dict[str, str],
    persistence: Optional[str] = None,
) -> List[str]:
    """
    タイルごとに使うモデルを決める.
    persistence のクラスタは PERSIST (最後の観測をそのまま使う), 専用モデルのあるクラスタはそのラベル,
    ほかは全タイル向けのモデル DEFAULT_MODEL.
    """
    routes: List[str] = []
    for index, label in enumerate(labels):
        if label is not None and label == persistence:
            routes.append(PERSIST)
        elif label is not None and label in checkpoints:
            routes.append(label)
        elif DEFAULT_MODEL in checkpoints:
            routes.append(DEFAULT_MODEL)
        else:
            raise ConfigError(f"{__name__}: tile {tile_id(index)} of cluster {label!r} has no checkpoint")
    return routes
