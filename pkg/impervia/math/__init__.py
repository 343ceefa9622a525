"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


from .clamp_percent import clamp_percent, percent_to_latent, latent_to_percent
from .seed_stream import derive_seed

__all__ = [
    "clamp_percent",
    "percent_to_latent",
    "latent_to_percent",
    "derive_seed",
]
