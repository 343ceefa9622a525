"""
spade.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional, Sequence, Tuple

import torch
import torch.nn.functional as F
from torch import nn


class SpadeSite(nn.Module):
    """
    正規化1か所ぶんの SPADE ブロック. Conv -> ReLU の幹から, 並列な2つの Conv で
    gamma と beta を出す. gamma / beta の Conv は 0 で初期化し, 学習前の変調を恒等にする.
    """

    def __init__(self, n_cond: int, hidden: int, channels: int) -> None:
        super().__init__()
        self.trunk = nn.Conv2d(n_cond, hidden, kernel_size=3, padding=1)
        self.gamma = nn.Conv2d(hidden, channels, kernel_size=3, padding=1)
        self.beta = nn.Conv2d(hidden, channels, kernel_size=3, padding=1)
        for conv in (self.gamma, self.beta):
            nn.init.zeros_(conv.weight)
            nn.init.zeros_(conv.bias)

    def forward(self, fused: torch.Tensor, size: Optional[Sequence[int]] = None) -> Tuple[torch.Tensor, torch.Tensor]:
        return spade_modulation(fused, self, size)


def spade_modulation(
    fused: torch.Tensor,
    site: SpadeSite,
    size: Optional[Sequence[int]] = None,
) -> Tuple[torch.Tensor, torch.Tensor]:
    """
    融合済みの条件付け (B, N, H, W) から gamma, beta を推定する.
    size が入力と違えば最近傍補間で変調先の解像度に合わせる.
    """
    actv = F.relu(site.trunk(fused))
    gamma = site.gamma(actv)
    beta = site.beta(actv)
    if size is not None and tuple(size) != tuple(gamma.shape[-2:]):
        gamma = F.interpolate(gamma, size=tuple(size), mode="nearest")
        beta = F.interpolate(beta, size=tuple(size), mode="nearest")
    return gamma, beta
