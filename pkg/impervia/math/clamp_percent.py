"""
clamp_percent.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import TypeVar

import numpy as np

ArrayT = TypeVar("ArrayT")


def clamp_percent(value: ArrayT) -> ArrayT:
    """
    不浸透率を 0 ~ 100 [%] の範囲にする.

    Parameters
    ----------
    value : float or np.ndarray
        不浸透率 [%]

    Returns
    -------
    res : float or np.ndarray
        不浸透率 [%]
    """
    return np.clip(value, 0.0, 100.0)  # type: ignore[return-value]


def percent_to_latent(percent: ArrayT) -> ArrayT:
    """
    不浸透率 [0, 100] を拡散モデルの入力範囲 [-1, 1] に変換する.
    x = p / 50 - 1.
    """
    return percent / 50.0 - 1.0  # type: ignore[operator]


def latent_to_percent(latent: ArrayT) -> ArrayT:
    """
    [-1, 1] の値を不浸透率 [%] に戻す. 範囲外は 0 ~ 100 に丸める.
    """
    return clamp_percent((latent + 1.0) * 50.0)  # type: ignore[operator]
