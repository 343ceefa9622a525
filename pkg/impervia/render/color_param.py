"""
color_param.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

class ColorParam:
    """
    グラフの色に関するパラメータを格納するクラス.
    """

    model_curve_color: str = "tab:blue"
    model_curve_alpha: float = 1.0
    null_curve_color: str = "tab:orange"
    null_curve_alpha: float = 1.0
    null_resolution_color: str = "black"
    null_resolution_alpha: float = 0.6
    grid_color: str = "gray"
    grid_alpha: float = 0.3
