"""
eval_report.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import numpy.typing as npt

from ..raster.grid import Grid
from .change_stats import ChangeStats, change_stats
from .confusion import ConfusionCounts, change_mask, confusion
from .mae_curve import DEFAULT_CELLS, MaeCurve, mae_curve, null_forecast, write_curves_csv
from .null_resolution import NullResolution, mae_at_nr, null_resolution
from .seed_stats import seed_stats


@dataclass
class EvalReport:
    """1つの AOI (またはクラスタ) の評価結果."""

    model_curve: MaeCurve
    null_curve: MaeCurve
    null_resolution: NullResolution
    mae_at_nr: Optional[float]
    spline_domain: str = "linear"
    seed_mean: Optional[Grid] = None
    seed_std: Optional[Grid] = None
    confusion: Optional[ConfusionCounts] = None
    change: Optional[ChangeStats] = None
    name: str = ""


def report_from_curves(
    model: MaeCurve,
    null: MaeCurve,
    spline_domain: str = "linear",
    name: str = "",
) -> EvalReport:
    """曲線だけから null resolution と MAE@NR を求めた EvalReport を作る."""
    nr = null_resolution(model, null, spline_domain)
    return EvalReport(model, null, nr, mae_at_nr(null, nr, spline_domain), spline_domain, name=name)


def evaluate(
    preds: Sequence[Grid],
    past: Grid,
    truth: Grid,
    cells: Sequence[int] = DEFAULT_CELLS,
    *,
    spline_domain: str = "linear",
    mask: Optional[npt.NDArray[np.bool_]] = None,
    name: str = "",
) -> EvalReport:
    """
    シードごとの予測を平均し, 変化なしモデルと比べた評価をまとめる.

    Parameters
    ----------
    preds : Sequence[Grid]
        目標年の不浸透率 [%] の予測. シードの数だけ.
    past : Grid
        変化なしモデルが使う最後の観測.
    truth : Grid
        目標年の実際の不浸透率 [%].
    """
    mean, std = seed_stats(preds)
    model = mae_curve(mean, truth, cells, mask)
    null = mae_curve(null_forecast(past), truth, cells, mask)
    report = report_from_curves(model, null, spline_domain, name)
    report.seed_mean = mean
    report.seed_std = std
    report.confusion = confusion(change_mask(past, mean), change_mask(past, truth))
    report.change = change_stats(past, truth)
    return report


def format_report(report: EvalReport) -> str:
    """key = value の行からなるテキストにする."""
    lines: List[str] = []
    if report.name:
        lines.append(f"name = {report.name}")
    lines.append(f"spline_domain = {report.spline_domain}")
    lines.append("resolution_km = " + " ".join(f"{s:.6g}" for s in report.model_curve.scales))
    lines.append("model_mae = " + " ".join(f"{v:.6f}" for v in report.model_curve.values))
    lines.append("null_mae = " + " ".join(f"{v:.6f}" for v in report.null_curve.values))
    lines.append(f"null_resolution_km = {report.null_resolution}")
    lines.append("mae_at_nr = " + (f"{report.mae_at_nr:.6f}" if report.mae_at_nr is not None else "NA"))
    if report.change is not None:
        lines.append(f"mean_change = {report.change.mean:.4f}")
        lines.append(f"std_change = {report.change.std:.4f}")
    if report.seed_std is not None:
        std = report.seed_std.values[report.seed_std.valid]
        lines.append(f"mean_seed_std = {float(std.mean()) if std.size else 0.0:.6f}")
    if report.confusion is not None:
        c = report.confusion
        lines.append(f"tp = {c.tp}")
        lines.append(f"fp = {c.fp}")
        lines.append(f"fn = {c.fn}")
        lines.append(f"tn = {c.tn}")
        lines.append(f"precision = {c.precision:.2f}")
        lines.append(f"recall = {c.recall:.2f}")
        lines.append(f"f1 = {c.f1:.2f}")
        lines.append(f"degenerate = {str(c.degenerate).lower()}")
    return "\n".join(lines) + "\n"


def write_report(directory: str, report: EvalReport) -> List[str]:
    """report.txt と curves.csv を書き, 書いたファイルのパスを返す."""
    os.makedirs(directory, exist_ok=True)
    report_path = os.path.join(directory, "report.txt")
    curve_path = os.path.join(directory, "curves.csv")
    with open(report_path, "w", encoding="utf-8") as stream:
        stream.write(format_report(report))
    write_curves_csv(curve_path, report.model_curve, report.null_curve)
    return [report_path, curve_path]
