"""
markov_model.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..raster.grid import Grid, GridKind
from ..raster.lulc_legend import CA8_NAMES
from ..transition.transition_tables import crosstab


@dataclass(frozen=True)
class MarkovModel:
    """
    8 クラスの遷移確率行列と, 現在・1 ステップ先の面積 [セル].
    """

    transition: npt.NDArray[np.float64]  # (C, C), 行和 1
    current_areas: npt.NDArray[np.float64]
    target_areas: npt.NDArray[np.float64]

    @property
    def class_count(self) -> int:
        return int(self.transition.shape[0])

    def project(self, steps: int = 1) -> npt.NDArray[np.float64]:
        """current_areas を P で steps 回進めた面積."""
        if steps < 0:
            raise ValueError(f"{__name__}: steps must be >= 0, got {steps}")
        return self.current_areas @ np.linalg.matrix_power(self.transition, steps)


def area_counts(lc: Grid, class_count: int = 8) -> npt.NDArray[np.float64]:
    """有効画素のクラスごとのセル数."""
    lc.require_kind(GridKind.CATEGORICAL)
    lc.check_classes(class_count)
    return np.bincount(lc.values[lc.valid].astype(np.int64), minlength=class_count).astype(np.float64)


def fit_markov(lc_a: Grid, lc_b: Grid, class_count: int = 8) -> MarkovModel:
    """
    2 時点の土地被覆から遷移確率行列を作り, lc_b の面積を 1 ステップ進めて目標面積とする.
    観測のない行は単位行にする.
    """
    lc_a.check_classes(class_count)
    lc_b.check_classes(class_count)
    counts = crosstab(lc_a, lc_b, class_count).astype(np.float64)

    row_sums = counts.sum(axis=1, keepdims=True)
    transition = np.divide(counts, row_sums, out=np.zeros_like(counts), where=row_sums > 0)
    empty = row_sums[:, 0] == 0
    transition[empty] = np.eye(class_count)[empty]

    current = area_counts(lc_b, class_count)
    return MarkovModel(transition, current, current @ transition)


def format_matrix(transition: npt.NDArray[np.float64], names: Optional[Sequence[str]] = None) -> str:
    """遷移確率行列を空白区切りの表にする. 1 行目は列名."""
    names = list(names) if names is not None else list(CA8_NAMES[:transition.shape[0]])
    if len(names) != transition.shape[0]:
        raise ValueError(f"{__name__}: {len(names)} names for a {transition.shape[0]}-class matrix")
    lines = ["from\\to " + " ".join(names)]
    for name, row in zip(names, transition):
        lines.append(name + " " + " ".join(f"{p:.9g}" for p in row))
    return "\n".join(lines) + "\n"
