"""
temporal_signature.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..raster.grid import Grid, GridKind

SIGNATURE_STATS = ("mean_change", "changed_fraction")


@dataclass(frozen=True)
class TemporalSignature:
    """
    パッチごとの時系列特徴. 連続する年の組ごとの不浸透率の変化 [%pt]
    (signature_stat が changed_fraction なら増加した画素の割合 [%]).
    """

    patch_id: str
    values: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or values.size == 0:
            raise ValueError(f"{__name__}: signature must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"{__name__}: signature {self.patch_id!r} has non-finite values")
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.size)

    @property
    def mean_change(self) -> float:
        return float(self.values.mean())

    @property
    def mean_abs_change(self) -> float:
        return float(np.abs(self.values).mean())


def signature(series: Sequence[Grid], patch_id: str = "", stat: str = "mean_change") -> TemporalSignature:
    """
    1パッチぶんの不浸透率の時系列から TemporalSignature を作る.
    各区間で両年とも有効な画素だけを使う. 有効画素がない区間は 0.

    Parameters
    ----------
    series : Sequence[Grid]
        年の古い順に並んだ不浸透率 [%] のグリッド. 2枚以上.
    stat : str
        "mean_change" (平均変化) か "changed_fraction" (増加画素の割合).
    """
    if len(series) < 2:
        raise ValueError(f"{__name__}: need at least 2 timestamps, got {len(series)}")
    if stat not in SIGNATURE_STATS:
        raise ValueError(f"{__name__}: unknown signature stat {stat!r}, expected one of {SIGNATURE_STATS}")

    values = []
    for before, after in zip(series[:-1], series[1:]):
        before.require_kind(GridKind.CONTINUOUS)
        after.require_kind(GridKind.CONTINUOUS)
        before.same_shape(after)
        valid = before.valid & after.valid
        if not valid.any():
            values.append(0.0)
            continue
        diff = after.values[valid] - before.values[valid]
        if stat == "mean_change":
            values.append(float(diff.mean()))
        else:
            values.append(100.0 * float(np.count_nonzero(diff > 0)) / diff.size)
    return TemporalSignature(patch_id, np.asarray(values))
