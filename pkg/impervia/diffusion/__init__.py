"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .noise_schedule import NoiseSchedule, make_schedule
from .eps_predictor_protocol import EpsPredictorProtocol
from .forward_process import denoise_loss, diffusion_loss, q_sample
from .samplers import ddim_sample, ddim_timesteps, ddpm_sample
from .forecast_dataset import ForecastDataset
from .trainer import TrainParam, TrainResult, train
from .checkpoint import (
    Checkpoint,
    config_digest,
    load_checkpoint,
    load_loss_history,
    save_checkpoint,
    save_loss_history,
)

__all__ = [
    "NoiseSchedule",
    "make_schedule",
    "EpsPredictorProtocol",
    "denoise_loss",
    "diffusion_loss",
    "q_sample",
    "ddim_sample",
    "ddim_timesteps",
    "ddpm_sample",
    "ForecastDataset",
    "TrainParam",
    "TrainResult",
    "train",
    "Checkpoint",
    "config_digest",
    "load_checkpoint",
    "load_loss_history",
    "save_checkpoint",
    "save_loss_history",
]
