"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .change_stats import ChangeStats, change_stats
from .confusion import ConfusionCounts, change_mask, confusion, confusion_from_counts
from .eval_report import EvalReport, evaluate, format_report, report_from_curves, write_report
from .mae_curve import DEFAULT_CELLS, MaeCurve, mae, mae_curve, null_forecast, read_curves_csv, write_curves_csv
from .null_resolution import ABOVE_RANGE, BELOW_RANGE, SPLINE_DOMAINS, NullResolution, mae_at_nr, null_resolution
from .reference_curves import REFERENCE_CURVES, REFERENCE_SCALES, reference_curve
from .seed_stats import seed_stats

__all__ = [
    "ChangeStats",
    "change_stats",
    "ConfusionCounts",
    "change_mask",
    "confusion",
    "confusion_from_counts",
    "EvalReport",
    "evaluate",
    "format_report",
    "report_from_curves",
    "write_report",
    "DEFAULT_CELLS",
    "MaeCurve",
    "mae",
    "mae_curve",
    "null_forecast",
    "read_curves_csv",
    "write_curves_csv",
    "ABOVE_RANGE",
    "BELOW_RANGE",
    "SPLINE_DOMAINS",
    "NullResolution",
    "mae_at_nr",
    "null_resolution",
    "REFERENCE_CURVES",
    "REFERENCE_SCALES",
    "reference_curve",
    "seed_stats",
]
