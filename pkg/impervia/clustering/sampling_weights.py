"""
sampling_weights.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np
import numpy.typing as npt


def sampling_weights(ratios: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """
    クラスタの占有率の逆数に比例し, 和が 1 の重み.
    この重みでパッチを引けば, 各クラスタが引かれる頻度はほぼ等しくなる.
    """
    r = np.asarray(ratios, dtype=np.float64).reshape(-1)
    if r.size == 0:
        raise ValueError(f"{__name__}: no cluster ratios")
    if np.any(r <= 0) or not np.all(np.isfinite(r)):
        raise ValueError(f"{__name__}: cluster ratios must be positive, got {r}")
    if not np.isclose(r.sum(), 1.0, atol=1e-6):
        raise ValueError(f"{__name__}: cluster ratios must sum to 1, got {r.sum()}")
    inverse = 1.0 / r
    return inverse / inverse.sum()
