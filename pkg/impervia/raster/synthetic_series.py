"""
synthetic_series.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from scipy import ndimage

from .grid import Grid

NLCD_YEARS: Tuple[int, ...] = (2001, 2004, 2006, 2008, 2011, 2013, 2016, 2019, 2021)

# 自然被覆として使うクラス番号 (NLCD16 の並び). 開発地 2..5 は使わない.
_NATURAL_CLASSES = np.array([0, 7, 8, 10, 11, 12, 13, 14], dtype=np.uint8)


@dataclass(frozen=True)
class SyntheticSeries:
    """
    合成した年ごとの LULC と不浸透率のグリッド.
    """

    years: Tuple[int, ...]
    land_cover: Dict[int, Grid]
    imperviousness: Dict[int, Grid]


def _smooth_field(rng: np.random.Generator, shape: Tuple[int, int], sigma: float) -> npt.NDArray[np.float64]:
    field = ndimage.gaussian_filter(rng.standard_normal(shape), sigma=sigma, mode="reflect")
    field -= field.min()
    top = field.max()
    return field / top if top > 0 else field


def imperviousness_to_class(imp: npt.NDArray[np.float64], natural: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
    """
    不浸透率 [%] から開発地クラスを決める. 0% の画素は自然被覆のまま.
    区分は 20 / 50 / 80 % を境にする.
    """
    out = natural.copy()
    developed = imp > 0.0
    out[developed & (imp < 20.0)] = 2
    out[developed & (imp >= 20.0) & (imp < 50.0)] = 3
    out[(imp >= 50.0) & (imp < 80.0)] = 4
    out[imp >= 80.0] = 5
    return out


def generate_series(
    shape: Tuple[int, int] = (128, 128),
    years: Sequence[int] = NLCD_YEARS,
    *,
    seed: int = 0,
    cores: int = 3,
    growth: float = 1.0,
    pixel_size: float = 30.0,
) -> SyntheticSeries:
    """
    都市核のまわりに開発が広がる合成時系列を作る.
    NLCD と同じく不浸透率は年を追って減らない.

    Parameters
    ----------
    shape : Tuple[int, int]
        (height, width) [px]
    years : Sequence[int]
        年の一覧 (昇順).
    seed : int
        乱数シード.
    cores : int
        初期の都市核の数.
    growth : float
        1 年あたりの開発の速さの倍率.
    """
    if list(years) != sorted(set(years)):
        raise ValueError(f"{__name__}: years must be strictly increasing, got {years}")

    rng = np.random.default_rng(seed)
    height, width = shape

    # 自然被覆: 滑らかな場をしきい値で分ける.
    cover_field = _smooth_field(rng, shape, sigma=max(height, width) / 16.0)
    bins = np.linspace(0.0, 1.0, len(_NATURAL_CLASSES) + 1)[1:-1]
    natural = _NATURAL_CLASSES[np.digitize(cover_field, bins)]
    water = natural == 0

    # 都市核からの距離に応じた初期不浸透率.
    rows, cols = np.mgrid[0:height, 0:width]
    imp = np.zeros(shape, dtype=np.float64)
    for _ in range(cores):
        r0, c0 = rng.uniform(0, height), rng.uniform(0, width)
        radius = rng.uniform(0.08, 0.2) * max(height, width)
        dist = np.hypot(rows - r0, cols - c0)
        imp = np.maximum(imp, 100.0 * np.clip(1.0 - dist / radius, 0.0, 1.0) ** 1.5)
    imp[water] = 0.0
    imp = np.floor(imp)

    suitability = _smooth_field(rng, shape, sigma=max(height, width) / 32.0)

    land_cover: Dict[int, Grid] = {}
    imperviousness: Dict[int, Grid] = {}
    previous_year = years[0]
    for year in years:
        gap = year - previous_year
        if gap > 0:
            # 開発済みの画素の近くほど開発圧が高い.
            pressure = ndimage.uniform_filter((imp > 0).astype(np.float64), size=5, mode="nearest")
            chance = np.clip(growth * gap * 0.02 * pressure * (0.5 + suitability), 0.0, 1.0)
            grow = (rng.random(shape) < chance) & ~water
            increment = np.where(grow, rng.uniform(5.0, 30.0, shape), 0.0)
            imp = np.minimum(100.0, imp + np.floor(increment))

        imperviousness[year] = Grid.continuous(imp.copy(), pixel_size=pixel_size)
        land_cover[year] = Grid.categorical(
            imperviousness_to_class(imp, natural), pixel_size=pixel_size, class_count=16
        )
        previous_year = year

    return SyntheticSeries(tuple(years), land_cover, imperviousness)


@dataclass(frozen=True)
class ToySample:
    """
    トイ課題の1サンプル. history は古い順の N 枚の不浸透率 [%],
    likelihood は対応する N 枚の尤度マップ [0, 1], truth は 10 年後の不浸透率 [%].
    """

    history: npt.NDArray[np.float64]  # (N, side, side)
    likelihood: npt.NDArray[np.float64]  # (N, side, side)
    truth: npt.NDArray[np.float64]  # (side, side)

    @property
    def past(self) -> npt.NDArray[np.float64]:
        """最後に観測された不浸透率."""
        return self.history[-1]


def make_toy_task(count: int, side: int = 32, n_cond: int = 3, *, seed: int = 0) -> List[ToySample]:
    """
    truth = clamp(past + 5 * Lambda) となる合成課題を作る.
    過去の履歴も同じ速さで増えてきたものとして, past から遡って作る.
    """
    if count < 1 or n_cond < 1:
        raise ValueError(f"{__name__}: {count=} and {n_cond=} must be positive")

    rng = np.random.default_rng(seed)
    samples: List[ToySample] = []
    for _ in range(count):
        past = 100.0 * _smooth_field(rng, (side, side), sigma=side / 6.0) ** 2
        lam = _smooth_field(rng, (side, side), sigma=side / 8.0)
        history = np.stack(
            [np.clip(past - 5.0 * lam * (n_cond - 1 - k), 0.0, 100.0) for k in range(n_cond)]
        )
        likelihood = np.repeat(lam[None], n_cond, axis=0)
        truth = np.clip(past + 5.0 * lam, 0.0, 100.0)
        samples.append(ToySample(history, likelihood, truth))
    return samples
