"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


from .color_param import ColorParam
from .curve_displayer import CurveDisplayer
from .display_flag import DisplayFlag
from .mae_curve_renderer import MaeCurveRenderer

__all__ = [
    "ColorParam",
    "CurveDisplayer",
    "DisplayFlag",
    "MaeCurveRenderer",
]
