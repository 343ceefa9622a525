"""
split_definition.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import SplitError
from ..raster.tile_set import TileSet

SplitPair = Tuple[int, Tuple[int, ...]]


def conditioning_years(years: Sequence[int], target: int, cond_lag: int = 10, n_cond: int = 3) -> Tuple[int, ...]:
    """
    target より cond_lag 年以上古い年のうち, 新しいほうから n_cond 個を古い順に返す.
    """
    eligible = sorted(y for y in years if target - y >= cond_lag)
    if len(eligible) < n_cond:
        raise SplitError(
            f"{__name__}: target {target} has {len(eligible)} years at least {cond_lag} years older, need {n_cond}"
        )
    return tuple(eligible[-n_cond:])


@dataclass(frozen=True)
class SplitDefinition:
    """学習用と評価用の (目標年, 条件付け年) の組と, タイルの位置."""

    years: Tuple[int, ...]
    cond_lag: int
    n_cond: int
    training_pairs: Tuple[SplitPair, ...]
    holdout_pairs: Tuple[SplitPair, ...]
    tile_origins: Tuple[Tuple[int, int], ...] = ()

    @property
    def training_targets(self) -> Tuple[int, ...]:
        return tuple(t for t, _ in self.training_pairs)

    @property
    def holdout_targets(self) -> Tuple[int, ...]:
        return tuple(t for t, _ in self.holdout_pairs)

    def to_text(self) -> str:
        lines = [
            "years=" + ",".join(str(y) for y in self.years),
            f"cond_lag={self.cond_lag}",
            f"n_cond={self.n_cond}",
        ]
        lines.extend(f"train={t}:" + ",".join(str(y) for y in c) for t, c in self.training_pairs)
        lines.extend(f"holdout={t}:" + ",".join(str(y) for y in c) for t, c in self.holdout_pairs)
        lines.extend(f"tile={r},{c}" for r, c in self.tile_origins)
        return "\n".join(lines) + "\n"


def make_split(
    tiles: TileSet,
    years: Sequence[int],
    target_years: Sequence[int],
    holdout_years: Sequence[int] = (),
    cond_lag: int = 10,
    n_cond: int = 3,
) -> SplitDefinition:
    """
    目標年ごとに条件付け年を決める. holdout_years は学習の目標年から外し, 評価用に回す.
    条件付け年が足りない目標年があれば SplitError.
    """
    if n_cond < 1 or cond_lag < 0:
        raise SplitError(f"{__name__}: invalid {n_cond=} or {cond_lag=}")
    known = set(years)
    for y in list(target_years) + list(holdout_years):
        if y not in known:
            raise SplitError(f"{__name__}: year {y} is not in the dataset years {sorted(known)}")

    holdout = set(holdout_years)
    training: List[SplitPair] = []
    for target in sorted(set(target_years) - holdout):
        training.append((target, conditioning_years(years, target, cond_lag, n_cond)))
    holdout_pairs: List[SplitPair] = [
        (target, conditioning_years(years, target, cond_lag, n_cond)) for target in sorted(holdout)
    ]
    if not training and not holdout_pairs:
        raise SplitError(f"{__name__}: no target years given")
    return SplitDefinition(tuple(sorted(years)), cond_lag, n_cond, tuple(training), tuple(holdout_pairs),
                           tiles.origins)
