"""
null_resolution.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.interpolate import CubicSpline  # type: ignore[import]
from scipy.optimize import brentq  # type: ignore[import]

from .mae_curve import MaeCurve

BELOW_RANGE = "BELOW_RANGE"
ABOVE_RANGE = "ABOVE_RANGE"
SPLINE_DOMAINS = ("linear", "log")

# 符号変化を探すときの, 節点間の分割数.
_SCAN_PER_INTERVAL = 64


@dataclass(frozen=True)
class NullResolution:
    """
    予測モデルと変化なしモデルの MAE が等しくなる解像度.
    status が "ok" 以外なら km は None.
    """

    km: Optional[float]
    status: str = "ok"

    @property
    def found(self) -> bool:
        return self.status == "ok"

    def __str__(self) -> str:
        return f"{self.km:.4f}" if self.km is not None else self.status


def _spline(curve: MaeCurve, domain: str) -> CubicSpline:
    x = np.log(curve.scales) if domain == "log" else curve.scales
    return CubicSpline(x, curve.values, bc_type="not-a-knot")


def null_resolution(model: MaeCurve, null: MaeCurve, spline_domain: str = "linear") -> NullResolution:
    """
    2本の曲線を3次スプラインで補間し, 差 (model - null) の根を Brent 法で求める.
    複数あれば最も細かい解像度側の根を返す.

    Parameters
    ----------
    spline_domain : str
        "linear" は km のまま, "log" は log(km) の上で補間する.
        既定は "linear". 組み込みの参照曲線 (reference_curves) の交点 all 0.698 km, vegas 0.189 km,
        chicago 2.161 km を再現するのは "linear" で, "log" では chicago が 2.119 km になる.

    Returns
    -------
    res : NullResolution
        細かい側ですでに model < null なら BELOW_RANGE, 交わらなければ ABOVE_RANGE.
    """
    if spline_domain not in SPLINE_DOMAINS:
        raise ValueError(f"{__name__}: unknown spline domain {spline_domain!r}, expected {SPLINE_DOMAINS}")
    if len(model) != len(null) or not np.allclose(model.scales, null.scales):
        raise ValueError(f"{__name__}: model and null curves must share scales")
    if len(model) < 4:
        raise ValueError(f"{__name__}: cubic interpolation needs at least 4 points, got {len(model)}")
    if not np.all(np.isfinite(model.values)) or not np.all(np.isfinite(null.values)):
        raise ValueError(f"{__name__}: curves contain non-finite MAE values")

    model_spline = _spline(model, spline_domain)
    null_spline = _spline(null, spline_domain)

    def diff(x: float) -> float:
        return float(model_spline(x) - null_spline(x))

    knots = np.log(model.scales) if spline_domain == "log" else model.scales
    to_km = (lambda x: float(np.exp(x))) if spline_domain == "log" else float

    d0 = diff(knots[0])
    if d0 < 0.0:
        return NullResolution(None, BELOW_RANGE)
    if d0 == 0.0:
        return NullResolution(to_km(knots[0]))

    for left, right in zip(knots[:-1], knots[1:]):
        grid = np.linspace(left, right, _SCAN_PER_INTERVAL + 1)
        values = model_spline(grid) - null_spline(grid)
        for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
            if fb == 0.0:
                return NullResolution(to_km(b))
            if np.sign(fa) != np.sign(fb):
                return NullResolution(to_km(brentq(diff, a, b, xtol=1e-12)))
    return NullResolution(None, ABOVE_RANGE)


def mae_at_nr(null: MaeCurve, resolution: NullResolution, spline_domain: str = "linear") -> Optional[float]:
    """null の曲線を null resolution で補間した MAE. 根がなければ None."""
    if resolution.km is None:
        return None
    x = np.log(resolution.km) if spline_domain == "log" else resolution.km
    return float(_spline(null, spline_domain)(x))
