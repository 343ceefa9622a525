"""
transition_tables.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import ClassIndexError, ShapeMismatchError
from ..raster.grid import Grid, GridKind
from ..raster.lulc_legend import LulcLegend


@dataclass(frozen=True)
class TransitionTables:
    """
    LULC の遷移集計.

    counts : C x C の遷移数 (T_count)
    collapsed : C x 2 (透水, 重み付き不浸透) に集約した値
    probs : C x 2 の遷移確率 (T_prob)
    absent_classes : 時刻 t に存在しなかったクラス (確率は [1, 0])
    """

    counts: npt.NDArray[np.int64]
    collapsed: npt.NDArray[np.float64]
    probs: npt.NDArray[np.float64]
    absent_classes: FrozenSet[int]


def crosstab(
    lc_t: Grid,
    lc_t1: Grid,
    class_count: int,
    *,
    chunk_size: Optional[int] = None,
) -> npt.NDArray[np.int64]:
    """
    2 時点の LULC の画素ごとのクロス集計をとる.
    どちらかが nodata の画素は数えない.

    Parameters
    ----------
    lc_t, lc_t1 : Grid
        カテゴリグリッド (同じ形).
    class_count : int
        クラス数 C.
    chunk_size : int, optional
        指定すると画素をこの数ずつに分けて集計し, 足し合わせる.

    Returns
    -------
    counts : np.ndarray
        counts[i][j] = lc_t が i, lc_t1 が j の画素数.
    """
    lc_t.require_kind(GridKind.CATEGORICAL)
    lc_t1.require_kind(GridKind.CATEGORICAL)
    if lc_t.shape != lc_t1.shape:
        raise ShapeMismatchError(f"{__name__}: {lc_t.shape=} != {lc_t1.shape=}")
    lc_t.check_classes(class_count)
    lc_t1.check_classes(class_count)

    valid = (lc_t.valid & lc_t1.valid).ravel()
    # (i, j) の組を i * C + j の1つの番号にして bincount する.
    codes = lc_t.values.ravel().astype(np.int64) * class_count + lc_t1.values.ravel().astype(np.int64)
    codes = codes[valid]

    size = class_count * class_count
    if chunk_size is None or chunk_size >= codes.size:
        counts = np.bincount(codes, minlength=size)
    else:
        counts = np.zeros(size, dtype=np.int64)
        for start in range(0, codes.size, chunk_size):
            counts += np.bincount(codes[start:start + chunk_size], minlength=size)
    return counts.astype(np.int64).reshape(class_count, class_count)


def collapse(counts: npt.ArrayLike, legend: LulcLegend) -> npt.NDArray[np.float64]:
    """
    C x C の遷移数を (透水, 不浸透) の C x 2 に集約する.
    不浸透の列は開発地クラスへの遷移数を重み (不浸透率の上限) 付きで足したもの.
    """
    mat = np.asarray(counts, dtype=np.float64)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ShapeMismatchError(f"{__name__}: counts must be square, got {mat.shape}")
    if mat.shape[0] != legend.class_count:
        raise ClassIndexError(f"{__name__}: counts has {mat.shape[0]} classes, legend has {legend.class_count}")

    out = np.zeros((mat.shape[0], 2), dtype=np.float64)
    out[:, 0] = mat[:, legend.pervious_flags].sum(axis=1)
    out[:, 1] = mat @ legend.weight_vector
    return out


def normalize(collapsed: npt.ArrayLike) -> Tuple[npt.NDArray[np.float64], FrozenSet[int]]:
    """
    各行を行和で割って確率にする. 行和が 0 の行は [1, 0] にし, そのクラスを返す.

    Returns
    -------
    res : Tuple[np.ndarray, FrozenSet[int]]
        (T_prob, 行和が 0 だったクラスの集合)
    """
    mat = np.asarray(collapsed, dtype=np.float64)
    if np.any(mat < 0):
        raise ValueError(f"{__name__}: collapsed table must be non-negative")

    sums = mat.sum(axis=1)
    absent = sums <= 0.0
    probs = np.zeros_like(mat)
    probs[~absent] = mat[~absent] / sums[~absent, None]
    probs[absent] = [1.0, 0.0]
    return probs, frozenset(int(i) for i in np.flatnonzero(absent))


def build_tables(lc_t: Grid, lc_t1: Grid, legend: Optional[LulcLegend] = None) -> TransitionTables:
    """crosstab -> collapse -> normalize をまとめて行う."""
    legend = LulcLegend.nlcd16() if legend is None else legend
    counts = crosstab(lc_t, lc_t1, legend.class_count)
    collapsed = collapse(counts, legend)
    probs, absent = normalize(collapsed)
    return TransitionTables(counts, collapsed, probs, absent)


def format_probs(probs: npt.ArrayLike, legend: Optional[LulcLegend] = None) -> str:
    """
    C x 2 の確率表を監査用のテキストにする (1 行 1 クラス, 有効数字 9 桁).
    """
    mat = np.asarray(probs, dtype=np.float64)
    lines = []
    for index, row in enumerate(mat):
        label = f"# {legend.names[index]}" if legend is not None and index < legend.class_count else ""
        lines.append(f"{row[0]:.9g} {row[1]:.9g} {label}".rstrip())
    return "\n".join(lines) + "\n"


def parse_probs(text: str) -> npt.NDArray[np.float64]:
    """format_probs の出力を読み戻す."""
    rows = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            rows.append([float(v) for v in body.split()])
    return np.asarray(rows, dtype=np.float64)
