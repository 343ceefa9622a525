"""
reference_curves.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Dict, Tuple

import numpy as np

from .mae_curve import DEFAULT_CELLS, MaeCurve

REFERENCE_SCALES = (0.12, 0.24, 0.48, 0.96, 1.92, 3.84)  # [km]

# (予測モデルの MAE, 変化なしモデルの MAE). 公開されている図から読み取った値.
REFERENCE_CURVES: Dict[str, Tuple[Tuple[float, ...], Tuple[float, ...]]] = {
    "all": (
        (0.982636, 0.901225, 0.803475, 0.695939, 0.591636, 0.503988),
        (0.746934, 0.746716, 0.746416, 0.746184, 0.746098, 0.746069),
    ),
    "vegas": (
        (0.554409, 0.510753, 0.463902, 0.419637, 0.379884, 0.345062),
        (0.526932, 0.526892, 0.526857, 0.526798, 0.526760, 0.526760),
    ),
    "chicago": (
        (1.090583, 1.000458, 0.885915, 0.752842, 0.619066, 0.508764),
        (0.601712, 0.601656, 0.601536, 0.601412, 0.601355, 0.601355),
    ),
    "cluster-a": (
        (4.092797, 3.876438, 3.672370, 3.503664, 3.412397, 3.356301),
        (8.708861, 8.707932, 8.706818, 8.706244, 8.706244, 8.706244),
    ),
    "cluster-b": (
        (3.038121, 2.864801, 2.667733, 2.467820, 2.299842, 2.198544),
        (4.521010, 4.519878, 4.518454, 4.517768, 4.517740, 4.517741),
    ),
    "cluster-c": (
        (1.765655, 1.615931, 1.448164, 1.281078, 1.122400, 0.978358),
        (1.871831, 1.871079, 1.870122, 1.869410, 1.869252, 1.869252),
    ),
    "cluster-d": (
        (1.086550, 0.969504, 0.822072, 0.672612, 0.517318, 0.376306),
        (0.690176, 0.689836, 0.689285, 0.688771, 0.688491, 0.688384),
    ),
}


def reference_curve(name: str) -> Tuple[MaeCurve, MaeCurve]:
    """名前から (model, null) の曲線を返す."""
    if name not in REFERENCE_CURVES:
        raise ValueError(f"{__name__}: unknown reference {name!r}, expected one of {sorted(REFERENCE_CURVES)}")
    model, null = REFERENCE_CURVES[name]
    scales = np.asarray(REFERENCE_SCALES)
    return MaeCurve(scales, np.asarray(model), DEFAULT_CELLS), MaeCurve(scales, np.asarray(null), DEFAULT_CELLS)
