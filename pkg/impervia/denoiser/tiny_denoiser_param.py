"""
tiny_denoiser_param.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .denoiser_param_protocol import DenoiserParamProtocol


class TinyDenoiserParam(DenoiserParamProtocol):
    """
    1段, 2チャンネルの最小構成. 勾配の数値検証や手計算との比較に使う.
    """
    depth: int = 1
    base_channels: int = 2
    gn_groups: int = 2
    embed_dim: int = 4
    n_cond: int = 3
    input_side: int = 8  # [px]
    spade_hidden: int = 2
