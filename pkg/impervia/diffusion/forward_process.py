"""
forward_process.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional, Union

import numpy as np
import torch

from ..errors import ShapeMismatchError
from .eps_predictor_protocol import EpsPredictorProtocol
from .noise_schedule import NoiseSchedule


def _broadcast_coef(values: np.ndarray, like: torch.Tensor) -> torch.Tensor:
    coef = torch.as_tensor(values, dtype=like.dtype)
    return coef.reshape((-1,) + (1,) * (like.dim() - 1))


def q_sample(
    x0: torch.Tensor,
    t: Union[int, torch.Tensor],
    eps: torch.Tensor,
    schedule: NoiseSchedule,
) -> torch.Tensor:
    """
    x_t = sqrt(ᾱ_t) x_0 + sqrt(1 - ᾱ_t) eps

    Parameters
    ----------
    x0, eps : torch.Tensor
        (B, ...) の同じ形のテンソル.
    t : int or torch.Tensor
        1 始まりの時刻. テンソルなら (B,).
    """
    if x0.shape != eps.shape:
        raise ShapeMismatchError(f"{__name__}: {tuple(x0.shape)=} != {tuple(eps.shape)=}")
    steps = np.asarray(t.detach().cpu().numpy() if torch.is_tensor(t) else t, dtype=np.int64).reshape(-1)
    if steps.size and (steps.min() < 1 or steps.max() > schedule.steps):
        raise ValueError(f"{__name__}: timesteps outside [1, {schedule.steps}]")
    if steps.size == 1:
        steps = np.repeat(steps, x0.shape[0])
    ab = schedule.alpha_bar[steps - 1]
    return _broadcast_coef(np.sqrt(ab), x0) * x0 + _broadcast_coef(np.sqrt(1.0 - ab), x0) * eps


def denoise_loss(predicted: torch.Tensor, target: torch.Tensor) -> torch.Tensor:
    """eps の推定値と真値の平均二乗誤差."""
    if predicted.shape != target.shape:
        raise ShapeMismatchError(f"{__name__}: {tuple(predicted.shape)=} != {tuple(target.shape)=}")
    return torch.mean((predicted - target) ** 2)


def diffusion_loss(
    model: EpsPredictorProtocol,
    x0: torch.Tensor,
    cond: Optional[torch.Tensor],
    schedule: NoiseSchedule,
    generator: torch.Generator,
) -> torch.Tensor:
    """t を一様に, eps を標準正規分布から引き, 1バッチぶんの損失を計算する."""
    batch = x0.shape[0]
    t = torch.randint(1, schedule.steps + 1, (batch,), generator=generator)
    eps = torch.randn(x0.shape, generator=generator, dtype=x0.dtype)
    x_t = q_sample(x0, t, eps, schedule)
    return denoise_loss(model(x_t, t, cond), eps)
