"""
forecast_dataset.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import torch

from ..denoiser.conditioning_stack import ConditioningStack, batch_stacks
from ..errors import ShapeMismatchError
from ..math.clamp_percent import percent_to_latent


@dataclass(frozen=True)
class ForecastDataset:
    """
    学習用の (条件付け, 目標) の組.
    targets は [-1, 1] に正規化した目標年の不浸透率 (M, 1, S, S),
    conds は (M, N, 2, S, S). weights を与えると重み付きでバッチを引く.
    """

    targets: torch.Tensor
    conds: torch.Tensor
    weights: Optional[torch.Tensor] = None

    def __post_init__(self) -> None:
        if self.targets.dim() != 4 or self.conds.dim() != 5:
            raise ShapeMismatchError(
                f"{__name__}: targets (M,1,S,S) / conds (M,N,2,S,S) expected, "
                f"got {tuple(self.targets.shape)} / {tuple(self.conds.shape)}"
            )
        if len(self.targets) == 0:
            raise ValueError(f"{__name__}: dataset is empty")
        if len(self.targets) != len(self.conds):
            raise ShapeMismatchError(f"{__name__}: {len(self.targets)=} != {len(self.conds)=}")
        if self.weights is not None:
            if self.weights.shape != (len(self.targets),):
                raise ShapeMismatchError(f"{__name__}: weights must be ({len(self.targets)},)")
            if (self.weights < 0).any() or float(self.weights.sum()) <= 0.0:
                raise ValueError(f"{__name__}: weights must be non-negative with a positive sum")

    def __len__(self) -> int:
        return int(self.targets.shape[0])

    def sample_indices(self, generator: torch.Generator, batch_size: int) -> torch.Tensor:
        """バッチの添字を引く. 重みがあれば重み付きの復元抽出."""
        if self.weights is not None:
            return torch.multinomial(self.weights.double(), batch_size, replacement=True, generator=generator)
        return torch.randint(0, len(self), (batch_size,), generator=generator)

    @classmethod
    def from_stacks(
        cls,
        targets_percent: Sequence[np.ndarray],
        stacks: Sequence[ConditioningStack],
        weights: Optional[Sequence[float]] = None,
    ) -> "ForecastDataset":
        """不浸透率 [%] の目標と ConditioningStack の列から作る."""
        if len(targets_percent) != len(stacks):
            raise ShapeMismatchError(f"{__name__}: {len(targets_percent)=} != {len(stacks)=}")
        if not stacks:
            raise ValueError(f"{__name__}: dataset is empty")
        targets = torch.from_numpy(np.stack([percent_to_latent(t) for t in targets_percent])[:, None]).float()
        w = None if weights is None else torch.as_tensor(np.asarray(weights, dtype=np.float64))
        return cls(targets, batch_stacks(stacks), w)
