"""
eps_predictor_protocol.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional, Protocol

import torch


class EpsPredictorProtocol(Protocol):
    """
    ノイズ推定器のプロトコル. Denoiser やテスト用の解析的な推定器がこれを満たす.
    """

    def __call__(self, x_t: torch.Tensor, t: torch.Tensor, cond: Optional[torch.Tensor]) -> torch.Tensor:
        ...
