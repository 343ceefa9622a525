"""
fusion.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional

import torch
import torch.nn.functional as F
from torch import nn

from ..errors import ShapeMismatchError


def fuse_conditions(
    stack: torch.Tensor,
    weight: torch.Tensor,
    bias: Optional[torch.Tensor],
    n_cond: Optional[int] = None,
) -> torch.Tensor:
    """
    共有 1x1 conv で各時点の [I_t; Lambda_t] を 1 チャンネルにし, 時点の順に並べる.

    Parameters
    ----------
    stack : torch.Tensor
        (B, N, 2, H, W) の条件付け.
    weight : torch.Tensor
        (1, 2, 1, 1) の重み. すべての時点で共有する.
    bias : torch.Tensor, optional
        (1,) のバイアス.
    n_cond : int, optional
        指定すると N がこれと一致するかを調べる.

    Returns
    -------
    fused : torch.Tensor
        (B, N, H, W)
    """
    if stack.dim() != 5 or stack.shape[2] != 2:
        raise ShapeMismatchError(f"{__name__}: stack must be (B, N, 2, H, W), got {tuple(stack.shape)}")
    batch, n, _, height, width = stack.shape
    if n_cond is not None and n != n_cond:
        raise ShapeMismatchError(f"{__name__}: stack has N={n}, model expects {n_cond}")

    out = F.conv2d(stack.reshape(batch * n, 2, height, width), weight, bias)
    return out.reshape(batch, n, height, width)


class SharedFusion(nn.Module):
    """
    (I_t, Lambda_t) の組を早期融合する共有 1x1 conv.
    """

    def __init__(self, n_cond: int) -> None:
        super().__init__()
        self.n_cond = n_cond
        self.conv = nn.Conv2d(2, 1, kernel_size=1)

    def forward(self, stack: torch.Tensor) -> torch.Tensor:
        return fuse_conditions(stack, self.conv.weight, self.conv.bias, self.n_cond)
