"""
noise_schedule.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt


@dataclass(frozen=True)
class NoiseSchedule:
    """
    線形な分散スケジュール. 時刻 t は 1 始まりで, 配列の添字は t - 1.
    """

    steps: int
    beta: npt.NDArray[np.float64]
    alpha: npt.NDArray[np.float64]
    alpha_bar: npt.NDArray[np.float64]

    def check_step(self, t: int) -> None:
        if t < 1 or t > self.steps:
            raise ValueError(f"{__name__}: timestep {t} outside [1, {self.steps}]")

    def alpha_bar_at(self, t: int) -> float:
        """ᾱ_t. t = 0 は 1 とする."""
        if t == 0:
            return 1.0
        self.check_step(t)
        return float(self.alpha_bar[t - 1])

    def posterior_variance(self, t: int) -> float:
        """事後分布 q(x_{t-1} | x_t, x_0) の分散."""
        self.check_step(t)
        ab = self.alpha_bar_at(t)
        ab_prev = self.alpha_bar_at(t - 1)
        return float(self.beta[t - 1] * (1.0 - ab_prev) / (1.0 - ab))


def make_schedule(steps: int = 1000, beta_start: float = 1e-4, beta_end: float = 0.02) -> NoiseSchedule:
    """
    beta を beta_start から beta_end まで線形に並べたスケジュールを作る.

    Parameters
    ----------
    steps : int
        拡散ステップ数 T.
    beta_start, beta_end : float
        0 < beta_start <= beta_end < 1.
    """
    if steps < 1:
        raise ValueError(f"{__name__}: steps must be >= 1, got {steps}")
    if not 0.0 < beta_start <= beta_end < 1.0:
        raise ValueError(f"{__name__}: need 0 < beta_start <= beta_end < 1, got {beta_start=}, {beta_end=}")

    beta = np.linspace(beta_start, beta_end, steps, dtype=np.float64)
    alpha = 1.0 - beta
    alpha_bar = np.cumprod(alpha)
    return NoiseSchedule(steps, beta, alpha, alpha_bar)
