"""
denoiser_param_protocol.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Protocol


class DenoiserParamProtocol(Protocol):
    """
    Protocol for storing the topology of the conditional denoiser.
    DefaultDenoiserParam, TinyDenoiserParam and ImperviaConfig implement this protocol.
    """
    depth: int
    base_channels: int
    gn_groups: int
    embed_dim: int
    n_cond: int
    input_side: int
    spade_hidden: int
