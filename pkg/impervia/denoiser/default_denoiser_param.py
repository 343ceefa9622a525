"""
default_denoiser_param.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .denoiser_param_protocol import DenoiserParamProtocol


class DefaultDenoiserParam(DenoiserParamProtocol):
    """
    机上で CPU 学習できる大きさの既定の UNet のパラメータを持つクラス.
    """
    depth: int = 3  # UNet の段数
    base_channels: int = 8  # 1段目のチャンネル数, 段ごとに2倍
    gn_groups: int = 4  # GroupNorm のグループ数
    embed_dim: int = 32  # 時刻埋め込みの次元
    n_cond: int = 3  # 条件付けに使う過去の時点数 N
    input_side: int = 32  # [px]
    spade_hidden: int = 16  # SPADE の中間チャンネル数
