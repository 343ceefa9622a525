"""
likelihood_map.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from ..errors import ClassIndexError
from ..raster.grid import Grid, GridKind
from ..raster.lulc_legend import LulcLegend
from .transition_tables import TransitionTables, build_tables


@dataclass(frozen=True)
class LikelihoodMap:
    """
    不浸透化の尤度マップ (値は [0, 1]).
    source は確率表を作った 2 時点の番号 (t, t+1).
    """

    grid: Grid
    source: Tuple[int, int]
    tables: Optional[TransitionTables] = None


def likelihood_map(lc: Grid, probs: npt.ArrayLike, *, source: Tuple[int, int] = (0, 1)) -> LikelihoodMap:
    """
    確率表の不浸透列 probs[:, 1] を画素ごとに引いて尤度マップを作る.

    Parameters
    ----------
    lc : Grid
        カテゴリグリッド.
    probs : array_like
        C x 2 の遷移確率.
    """
    lc.require_kind(GridKind.CATEGORICAL)
    table = np.asarray(probs, dtype=np.float64)
    try:
        lc.check_classes(table.shape[0])
    except ClassIndexError as exc:
        raise ClassIndexError(f"{__name__}: {exc}") from exc

    # nodata 画素の値は 0 番の行を引いておき, マスクで無効にする.
    index = np.where(lc.valid, lc.values, 0)
    values = table[index, 1]
    values[lc.mask] = -1.0
    grid = Grid(values, GridKind.CONTINUOUS, lc.pixel_size, lc.mask.copy(), -1.0)
    return LikelihoodMap(grid, source)


def likelihood_series(
    land_covers: Sequence[Grid],
    legend: Optional[LulcLegend] = None,
) -> List[LikelihoodMap]:
    """
    N 枚の LULC から N 枚の尤度マップを作る.
    1 ~ N-1 枚目は連続する 2 枚 (lc_k, lc_k+1) から, N 枚目は最後の組の確率表を
    lc_N 自身に当てはめて作る.
    """
    if len(land_covers) < 2:
        raise ValueError(f"{__name__}: need at least 2 land cover maps, got {len(land_covers)}")
    legend = LulcLegend.nlcd16() if legend is None else legend

    maps: List[LikelihoodMap] = []
    tables: Optional[TransitionTables] = None
    for k in range(len(land_covers) - 1):
        tables = build_tables(land_covers[k], land_covers[k + 1], legend)
        lmap = likelihood_map(land_covers[k], tables.probs, source=(k, k + 1))
        maps.append(LikelihoodMap(lmap.grid, lmap.source, tables))

    assert tables is not None
    last = len(land_covers) - 1
    extra = likelihood_map(land_covers[last], tables.probs, source=(last - 1, last))
    maps.append(LikelihoodMap(extra.grid, extra.source, tables))
    return maps
