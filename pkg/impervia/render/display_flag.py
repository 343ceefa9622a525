"""
display_flag.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

class DisplayFlag:
    """
    グラフの表示に関するフラグを格納するクラス.
    """

    display_null_curve: bool = True
    display_null_resolution: bool = True
    display_markers: bool = True
    display_grid: bool = True
    log_x_axis: bool = True
