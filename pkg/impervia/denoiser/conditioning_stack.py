"""
conditioning_stack.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
import torch

from ..errors import ShapeMismatchError
from ..math.clamp_percent import percent_to_latent
from ..raster.grid import Grid, GridKind


@dataclass(frozen=True)
class ConditioningStack:
    """
    N 組の (不浸透率 I_t, 尤度マップ Lambda_t).
    imperviousness は [-1, 1] に正規化済み, likelihood は [0, 1] のまま持つ.
    """

    imperviousness: npt.NDArray[np.float64]  # (N, side, side)
    likelihood: npt.NDArray[np.float64]  # (N, side, side)
    years: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        imp = np.asarray(self.imperviousness, dtype=np.float64)
        lam = np.asarray(self.likelihood, dtype=np.float64)
        if imp.ndim != 3 or imp.shape != lam.shape:
            raise ShapeMismatchError(f"{__name__}: {imp.shape=} and {lam.shape=} must be equal (N, H, W)")
        if self.years and len(self.years) != imp.shape[0]:
            raise ShapeMismatchError(f"{__name__}: {len(self.years)=} != N={imp.shape[0]}")
        object.__setattr__(self, "imperviousness", imp)
        object.__setattr__(self, "likelihood", lam)

    @property
    def n_cond(self) -> int:
        """条件付けの時点数 N"""
        return int(self.imperviousness.shape[0])

    @property
    def side(self) -> int:
        """一辺 [px]"""
        return int(self.imperviousness.shape[-1])

    def to_tensor(self, dtype: torch.dtype = torch.float32) -> torch.Tensor:
        """(N, 2, H, W) のテンソルにする. チャンネル 0 が I_t, 1 が Lambda_t."""
        return torch.from_numpy(np.stack([self.imperviousness, self.likelihood], axis=1)).to(dtype)

    @classmethod
    def from_grids(
        cls,
        imperviousness: Sequence[Grid],
        likelihood: Sequence[Grid],
        years: Optional[Sequence[int]] = None,
    ) -> "ConditioningStack":
        """
        不浸透率 [%] のグリッドと尤度マップのグリッドから作る.
        nodata の画素は不浸透率 0 %, 尤度 0 として埋める.
        """
        if len(imperviousness) != len(likelihood):
            raise ShapeMismatchError(f"{__name__}: {len(imperviousness)=} != {len(likelihood)=}")
        imps = []
        lams = []
        for imp_grid, lam_grid in zip(imperviousness, likelihood):
            imp_grid.require_kind(GridKind.CONTINUOUS)
            lam_grid.require_kind(GridKind.CONTINUOUS)
            imp_grid.same_shape(lam_grid)
            imps.append(percent_to_latent(np.where(imp_grid.valid, imp_grid.values, 0.0)))
            lams.append(np.where(lam_grid.valid, lam_grid.values, 0.0))
        return cls(np.stack(imps), np.stack(lams), tuple(years) if years is not None else ())


def batch_stacks(stacks: Sequence[ConditioningStack], dtype: torch.dtype = torch.float32) -> torch.Tensor:
    """複数の ConditioningStack を (B, N, 2, H, W) にまとめる."""
    if not stacks:
        raise ValueError(f"{__name__}: no conditioning stacks")
    return torch.stack([s.to_tensor(dtype) for s in stacks])
