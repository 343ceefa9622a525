"""
suitability.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import numpy as np
import numpy.typing as npt
from scipy import ndimage  # type: ignore[import]

from ..raster.grid import Grid, GridKind
from .markov_model import MarkovModel


def neighborhood_fractions(lc: Grid, class_count: int, window: int) -> npt.NDArray[np.float64]:
    """
    各画素の window x window の窓の中で, クラス c が占める割合 (C, H, W).
    端では窓を切り詰め, nodata の画素は分母にも数えない.
    """
    if window < 1 or window % 2 == 0:
        raise ValueError(f"{__name__}: window must be a positive odd number, got {window}")
    lc.require_kind(GridKind.CATEGORICAL)
    kernel = np.ones((window, window))
    valid = lc.valid.astype(np.float64)
    denom = ndimage.convolve(valid, kernel, mode="constant", cval=0.0)

    out = np.zeros((class_count,) + lc.shape)
    for c in range(class_count):
        member = ((lc.values == c) & lc.valid).astype(np.float64)
        count = ndimage.convolve(member, kernel, mode="constant", cval=0.0)
        out[c] = np.divide(count, denom, out=np.zeros_like(count), where=denom > 0)
    return out


def suitability(lc: Grid, model: MarkovModel, window: int = 5, floor: float = 1e-6) -> npt.NDArray[np.float64]:
    """
    suitability_c(p) = max(P[lc(p), c] * neigh_c(p), floor).
    nodata の画素は 0.

    Returns
    -------
    suit : np.ndarray
        (C, H, W), 値は [0, 1].
    """
    c_count = model.class_count
    lc.check_classes(c_count)
    neigh = neighborhood_fractions(lc, c_count, window)
    current = np.where(lc.valid, lc.values, 0).astype(np.int64)
    row_prob = np.moveaxis(model.transition[current], -1, 0)  # (C, H, W)
    suit = np.maximum(row_prob * neigh, floor)
    suit[:, lc.mask] = 0.0
    return np.clip(suit, 0.0, 1.0)
