"""
ca_param.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


class CaParam:
    """
    CA-Markov ベースラインの既定値を持つクラス.
    """
    window: int = 5  # 近傍の窓の一辺 [px], 奇数
    eta: float = 0.1  # 乗数の更新率
    tolerance: float = 0.005  # 目標面積に対する許容誤差の割合
    max_iter: int = 500
    floor: float = 1e-6  # 適合度の下限 τ
    class_count: int = 8
