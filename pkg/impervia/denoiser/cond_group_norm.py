"""
cond_group_norm.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional

import torch
import torch.nn.functional as F

GN_EPS = 1e-5


def cond_group_norm(
    h: torch.Tensor,
    gamma: Optional[torch.Tensor],
    beta: Optional[torch.Tensor],
    groups: int,
    eps: float = GN_EPS,
) -> torch.Tensor:
    """
    GroupNorm のあと h_hat * (1 + gamma) + beta で変調する.
    gamma, beta が None なら素の GroupNorm.

    Parameters
    ----------
    h : torch.Tensor
        (B, C, H, W) の特徴.
    groups : int
        グループ数. C を割り切ること.
    """
    channels = h.shape[1]
    if groups < 1 or channels % groups:
        raise ValueError(f"{__name__}: {channels=} is not divisible by {groups=}")

    normalized = F.group_norm(h, groups, eps=eps)
    if gamma is None or beta is None:
        return normalized
    return normalized * (1.0 + gamma) + beta
