"""
seed_stream.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np


def derive_seed(seed: int, *keys: int) -> int:
    """
    基本シードとキー (タイル番号, シード番号など) から独立した乱数列用のシードを作る.
    同じ引数からは常に同じ値が得られる.

    Parameters
    ----------
    seed : int
        基本シード (--seed)
    keys : int
        ストリームを区別するための番号

    Returns
    -------
    res : int
        63bit に収まるシード
    """
    if seed < 0 or any(k < 0 for k in keys):
        raise ValueError(f"{__name__}: seeds and keys must be non-negative, {seed=}, {keys=}")

    state = np.random.SeedSequence([seed, *keys]).generate_state(2, dtype=np.uint32)
    return int((int(state[0]) << 31) ^ int(state[1])) & ((1 << 63) - 1)
