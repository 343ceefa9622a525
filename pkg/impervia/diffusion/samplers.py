"""
samplers.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import math
from typing import Optional, Sequence

import numpy as np
import numpy.typing as npt
import torch

from ..errors import ShapeMismatchError
from .eps_predictor_protocol import EpsPredictorProtocol
from .noise_schedule import NoiseSchedule


def _initial_shape(cond: Optional[torch.Tensor], shape: Optional[Sequence[int]]) -> Sequence[int]:
    if shape is not None:
        if cond is not None and (shape[0] != cond.shape[0] or tuple(shape[-2:]) != tuple(cond.shape[-2:])):
            raise ShapeMismatchError(f"{__name__}: {tuple(shape)=} does not match cond {tuple(cond.shape)}")
        return tuple(shape)
    if cond is None:
        raise ShapeMismatchError(f"{__name__}: shape is required for unconditional sampling")
    if cond.dim() != 5:
        raise ShapeMismatchError(f"{__name__}: cond must be (B, N, 2, H, W), got {tuple(cond.shape)}")
    return (cond.shape[0], 1, cond.shape[-2], cond.shape[-1])


def ddpm_sample(
    model: EpsPredictorProtocol,
    cond: Optional[torch.Tensor],
    schedule: NoiseSchedule,
    generator: torch.Generator,
    *,
    shape: Optional[Sequence[int]] = None,
    dtype: torch.dtype = torch.float32,
    clip_output: bool = True,
) -> torch.Tensor:
    """
    x_T ~ N(0, I) から祖先サンプリングで x_0 まで戻す.
    平均は推定した eps を使った事後平均, 分散は事後分散. 値域 [-1, 1] への丸めは最後だけ.

    Returns
    -------
    x0 : torch.Tensor
        (B, 1, H, W)
    """
    shape = _initial_shape(cond, shape)
    x = torch.randn(tuple(shape), generator=generator, dtype=dtype)
    batch = x.shape[0]
    with torch.no_grad():
        for t in range(schedule.steps, 0, -1):
            tt = torch.full((batch,), t, dtype=torch.long)
            eps = model(x, tt, cond)
            beta = float(schedule.beta[t - 1])
            alpha = float(schedule.alpha[t - 1])
            ab = schedule.alpha_bar_at(t)
            x = (x - beta / math.sqrt(1.0 - ab) * eps) / math.sqrt(alpha)
            if t > 1:
                noise = torch.randn(x.shape, generator=generator, dtype=dtype)
                x = x + math.sqrt(schedule.posterior_variance(t)) * noise
    return x.clamp(-1.0, 1.0) if clip_output else x


def ddim_timesteps(total: int, steps: int) -> npt.NDArray[np.int64]:
    """
    1..total から等間隔に steps 個の時刻を選ぶ (昇順, 最後は必ず total).
    """
    if steps < 1 or steps > total:
        raise ValueError(f"{__name__}: DDIM steps must be in [1, {total}], got {steps}")
    return (np.arange(1, steps + 1, dtype=np.int64) * total) // steps


def ddim_sample(
    model: EpsPredictorProtocol,
    cond: Optional[torch.Tensor],
    schedule: NoiseSchedule,
    generator: torch.Generator,
    steps: int = 500,
    eta: float = 0.0,
    *,
    shape: Optional[Sequence[int]] = None,
    dtype: torch.dtype = torch.float32,
    clip_output: bool = True,
) -> torch.Tensor:
    """
    DDIM による高速サンプリング. eta = 0 なら x_T 以外に乱数を使わない.

    Parameters
    ----------
    steps : int
        使う時刻の数. T 以下.
    eta : float
        0 で決定的, 1 で DDPM と同じ分散.
    """
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"{__name__}: eta must be in [0, 1], got {eta}")
    taus = ddim_timesteps(schedule.steps, steps)
    shape = _initial_shape(cond, shape)
    x = torch.randn(tuple(shape), generator=generator, dtype=dtype)
    batch = x.shape[0]
    with torch.no_grad():
        for i in range(steps - 1, -1, -1):
            t = int(taus[i])
            t_prev = int(taus[i - 1]) if i > 0 else 0
            ab = schedule.alpha_bar_at(t)
            ab_prev = schedule.alpha_bar_at(t_prev)

            tt = torch.full((batch,), t, dtype=torch.long)
            eps = model(x, tt, cond)
            x0_hat = (x - math.sqrt(1.0 - ab) * eps) / math.sqrt(ab)

            sigma = eta * math.sqrt((1.0 - ab_prev) / (1.0 - ab)) * math.sqrt(1.0 - ab / ab_prev)
            direction = math.sqrt(max(1.0 - ab_prev - sigma ** 2, 0.0)) * eps
            x = math.sqrt(ab_prev) * x0_hat + direction
            if sigma > 0.0:
                x = x + sigma * torch.randn(x.shape, generator=generator, dtype=dtype)
    return x.clamp(-1.0, 1.0) if clip_output else x
