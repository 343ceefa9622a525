"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .cond_group_norm import cond_group_norm
from .conditioning_stack import ConditioningStack, batch_stacks
from .default_denoiser_param import DefaultDenoiserParam
from .denoiser_param_protocol import DenoiserParamProtocol
from .fusion import SharedFusion, fuse_conditions
from .gradients import gradients
from .spade import SpadeSite, spade_modulation
from .tiny_denoiser_param import TinyDenoiserParam
from .unet import Denoiser, ResBlock, build_denoiser, timestep_embedding

__all__ = [
    "cond_group_norm",
    "ConditioningStack",
    "batch_stacks",
    "DefaultDenoiserParam",
    "DenoiserParamProtocol",
    "SharedFusion",
    "fuse_conditions",
    "gradients",
    "SpadeSite",
    "spade_modulation",
    "TinyDenoiserParam",
    "Denoiser",
    "ResBlock",
    "build_denoiser",
    "timestep_embedding",
]
