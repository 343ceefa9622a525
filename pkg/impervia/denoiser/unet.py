"""
unet.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import math
from typing import List, Optional, Union

import torch
import torch.nn.functional as F
from torch import nn

from ..errors import ShapeMismatchError
from .cond_group_norm import cond_group_norm
from .denoiser_param_protocol import DenoiserParamProtocol
from .fusion import SharedFusion
from .spade import SpadeSite, spade_modulation


def timestep_embedding(t: torch.Tensor, dim: int, dtype: torch.dtype = torch.float32) -> torch.Tensor:
    """
    正弦波の時刻埋め込み. (B,) -> (B, dim)
    """
    half = dim // 2
    freqs = torch.exp(-math.log(10000.0) * torch.arange(half, dtype=dtype) / max(half, 1))
    args = t.to(dtype)[:, None] * freqs[None, :]
    emb = torch.cat([torch.cos(args), torch.sin(args)], dim=1)
    if dim % 2:
        emb = F.pad(emb, (0, 1))
    return emb


class ResBlock(nn.Module):
    """
    条件付き正規化 -> SiLU -> Conv を2回. 時刻埋め込みは1回目の Conv の後に足す.
    正規化ごとに専用の SpadeSite を持つ.
    """

    def __init__(self, in_ch: int, out_ch: int, param: DenoiserParamProtocol) -> None:
        super().__init__()
        for ch in (in_ch, out_ch):
            if param.gn_groups < 1 or ch % param.gn_groups:
                raise ValueError(f"{__name__}: {param.gn_groups=} does not divide channel count {ch}")
        self.groups = param.gn_groups
        self.site1 = SpadeSite(param.n_cond, param.spade_hidden, in_ch)
        self.conv1 = nn.Conv2d(in_ch, out_ch, kernel_size=3, padding=1)
        self.time_proj = nn.Linear(param.embed_dim, out_ch)
        self.site2 = SpadeSite(param.n_cond, param.spade_hidden, out_ch)
        self.conv2 = nn.Conv2d(out_ch, out_ch, kernel_size=3, padding=1)
        self.skip: nn.Module = nn.Conv2d(in_ch, out_ch, kernel_size=1) if in_ch != out_ch else nn.Identity()

    def forward(self, x: torch.Tensor, emb: torch.Tensor, fused: Optional[torch.Tensor]) -> torch.Tensor:
        size = x.shape[-2:]
        g1, b1 = spade_modulation(fused, self.site1, size) if fused is not None else (None, None)
        h = self.conv1(F.silu(cond_group_norm(x, g1, b1, self.groups)))
        h = h + self.time_proj(emb)[:, :, None, None]
        g2, b2 = spade_modulation(fused, self.site2, size) if fused is not None else (None, None)
        h = self.conv2(F.silu(cond_group_norm(h, g2, b2, self.groups)))
        return self.skip(x) + h


class Denoiser(nn.Module):
    """
    SPADE で条件付けした UNet. ノイズの乗った不浸透率 x_t から eps を推定する.
    cond を None にすると, 同じ幹の重みを使った条件なしの推定になる.
    """

    def __init__(self, param: DenoiserParamProtocol) -> None:
        super().__init__()
        if param.depth < 1:
            raise ValueError(f"{__name__}: depth must be >= 1, got {param.depth}")
        channels = [param.base_channels * 2 ** level for level in range(param.depth)]

        self.param = param
        self.embed_dim = param.embed_dim
        self.fusion = SharedFusion(param.n_cond)
        self.time_mlp = nn.Sequential(
            nn.Linear(param.embed_dim, param.embed_dim),
            nn.SiLU(),
            nn.Linear(param.embed_dim, param.embed_dim),
        )
        self.in_conv = nn.Conv2d(1, channels[0], kernel_size=3, padding=1)

        self.down = nn.ModuleList()
        prev = channels[0]
        for ch in channels:
            self.down.append(ResBlock(prev, ch, param))
            prev = ch
        self.mid = ResBlock(prev, prev, param)
        self.up = nn.ModuleList()
        for ch in reversed(channels):
            self.up.append(ResBlock(prev + ch, ch, param))
            prev = ch
        self.out_conv = nn.Conv2d(channels[0], 1, kernel_size=3, padding=1)

    def forward(
        self,
        x_t: torch.Tensor,
        t: Union[int, torch.Tensor],
        cond: Optional[torch.Tensor] = None,
    ) -> torch.Tensor:
        """
        Parameters
        ----------
        x_t : torch.Tensor
            (B, 1, H, W)
        t : int or torch.Tensor
            時刻 (1 始まり). int なら全バッチに同じ時刻を使う.
        cond : torch.Tensor, optional
            (B, N, 2, H, W) の条件付け.

        Returns
        -------
        eps : torch.Tensor
            (B, 1, H, W)
        """
        if x_t.dim() != 4 or x_t.shape[1] != 1:
            raise ShapeMismatchError(f"{__name__}: x_t must be (B, 1, H, W), got {tuple(x_t.shape)}")
        step = 2 ** (self.param.depth - 1)
        if x_t.shape[-1] % step or x_t.shape[-2] % step:
            raise ShapeMismatchError(f"{__name__}: side {tuple(x_t.shape[-2:])} not divisible by {step}")
        batch = x_t.shape[0]
        if not torch.is_tensor(t):
            t = torch.full((batch,), int(t), dtype=torch.long)
        elif t.dim() == 0:
            t = t.expand(batch)

        fused = None
        if cond is not None:
            if cond.shape[0] != batch or tuple(cond.shape[-2:]) != tuple(x_t.shape[-2:]):
                raise ShapeMismatchError(
                    f"{__name__}: cond {tuple(cond.shape)} does not match x_t {tuple(x_t.shape)}"
                )
            fused = self.fusion(cond.to(x_t.dtype))

        emb = self.time_mlp(timestep_embedding(t, self.embed_dim, x_t.dtype))
        h = self.in_conv(x_t)
        skips: List[torch.Tensor] = []
        for level, block in enumerate(self.down):
            h = block(h, emb, fused)
            skips.append(h)
            if level < len(self.down) - 1:
                h = F.avg_pool2d(h, 2)
        h = self.mid(h, emb, fused)
        for level, block in enumerate(self.up):
            skip = skips.pop()
            if h.shape[-2:] != skip.shape[-2:]:
                h = F.interpolate(h, size=skip.shape[-2:], mode="nearest")
            h = block(torch.cat([h, skip], dim=1), emb, fused)
        return self.out_conv(F.silu(h))


def build_denoiser(param: DenoiserParamProtocol, seed: int = 0) -> Denoiser:
    """seed から決定的に初期化した Denoiser を作る. 全体の乱数状態は変えない."""
    with torch.random.fork_rng(devices=[]):
        torch.manual_seed(seed)
        return Denoiser(param)
