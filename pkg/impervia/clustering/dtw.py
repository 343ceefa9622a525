"""
dtw.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Sequence, Union

import numpy as np
import numpy.typing as npt
import scipy.spatial.distance  # type: ignore[import]
import tqdm  # type: ignore[import]

from .temporal_signature import TemporalSignature


def dtw(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """
    動的時間伸縮距離. 局所コストは差の絶対値, 遷移は一致・挿入・削除.
    """
    x = np.asarray(a, dtype=np.float64).reshape(-1)
    y = np.asarray(b, dtype=np.float64).reshape(-1)
    if x.size == 0 or y.size == 0:
        raise ValueError(f"{__name__}: dtw needs nonempty sequences, got {x.size=}, {y.size=}")

    cost = np.abs(x[:, None] - y[None, :])
    acc = np.full((x.size + 1, y.size + 1), np.inf)
    acc[0, 0] = 0.0
    for i in range(1, x.size + 1):
        for j in range(1, y.size + 1):
            acc[i, j] = cost[i - 1, j - 1] + min(acc[i - 1, j], acc[i, j - 1], acc[i - 1, j - 1])
    return float(acc[x.size, y.size])


def distance_matrix(
    signatures: Sequence[Union[TemporalSignature, npt.ArrayLike]],
    show_progress: bool = False,
) -> npt.NDArray[np.float64]:
    """全組の DTW 距離を (n, n) の対称行列で返す."""
    series = [s.values if isinstance(s, TemporalSignature) else np.asarray(s, dtype=np.float64) for s in signatures]
    n = len(series)
    condensed = np.zeros(n * (n - 1) // 2)
    k = 0
    for i in tqdm.tqdm(range(n), disable=not show_progress, desc="dtw"):
        for j in range(i + 1, n):
            condensed[k] = dtw(series[i], series[j])
            k += 1
    if n < 2:
        return np.zeros((n, n))
    return scipy.spatial.distance.squareform(condensed)
