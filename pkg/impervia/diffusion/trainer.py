"""
trainer.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import math
from dataclasses import dataclass, field
from typing import Dict, List

import torch
from torch import nn
import tqdm  # type: ignore[import]

from ..errors import TrainingDivergenceError
from .forecast_dataset import ForecastDataset
from .forward_process import diffusion_loss
from .noise_schedule import NoiseSchedule


@dataclass(frozen=True)
class TrainParam:
    """学習のハイパーパラメータ."""

    learning_rate: float = 3e-4
    ema_rate: float = 0.99
    steps: int = 5000
    batch_size: int = 16
    seed: int = 0
    show_progress: bool = True


@dataclass
class TrainResult:
    """学習後のパラメータ, EMA パラメータ, 損失の履歴."""

    params: Dict[str, torch.Tensor]
    ema_params: Dict[str, torch.Tensor]
    loss_history: List[float] = field(default_factory=list)


def train(model: nn.Module, dataset: ForecastDataset, schedule: NoiseSchedule, param: TrainParam) -> TrainResult:
    """
    Adam で eps 推定の二乗誤差を最小化する. seed が同じなら損失の履歴も同じになる.
    """
    if param.batch_size < 1 or param.steps < 0:
        raise ValueError(f"{__name__}: invalid {param.batch_size=} or {param.steps=}")
    if param.learning_rate < 0.0 or not 0.0 <= param.ema_rate <= 1.0:
        raise ValueError(f"{__name__}: invalid {param.learning_rate=} or {param.ema_rate=}")

    generator = torch.Generator().manual_seed(param.seed)
    optimizer = torch.optim.Adam(model.parameters(), lr=param.learning_rate)
    ema = {name: p.detach().clone() for name, p in model.named_parameters()}
    history: List[float] = []

    model.train()
    for step in tqdm.tqdm(range(1, param.steps + 1), disable=not param.show_progress, desc="train"):
        index = dataset.sample_indices(generator, param.batch_size)
        loss = diffusion_loss(model, dataset.targets[index], dataset.conds[index], schedule, generator)
        value = float(loss.detach())
        if not math.isfinite(value):
            raise TrainingDivergenceError(f"{__name__}: loss became {value} at step {step}")

        optimizer.zero_grad()
        loss.backward()
        optimizer.step()
        with torch.no_grad():
            for name, p in model.named_parameters():
                ema[name].mul_(param.ema_rate).add_(p.detach(), alpha=1.0 - param.ema_rate)
        history.append(value)

    if history:
        print(f"{__name__}: loss {history[0]:.5f} -> {history[-1]:.5f} after {len(history)} steps")
    params = {name: t.detach().clone() for name, t in model.state_dict().items()}
    return TrainResult(params, ema, history)
