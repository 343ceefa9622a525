"""
plot_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os

from ..errors import ConfigError
from ..evaluation.eval_report import report_from_curves
from ..evaluation.mae_curve import read_curves_csv, write_curves_csv
from ..evaluation.reference_curves import REFERENCE_CURVES, reference_curve
from ..render.curve_displayer import CurveDisplayer
from ..render.display_flag import DisplayFlag
from .argument_parser import add_common_arguments, keys_epilog
from .impervia_config import ImperviaConfig
from .workspace import Workspace, finish_run

KEYS = ("spline_domain", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "plot", help="draw model and no-change MAE curves with the null resolution", epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--curves", metavar="CSV", help="curves.csv written by evaluate")
    source.add_argument("--reference", choices=sorted(REFERENCE_CURVES), help="plot a built-in reference curve")
    parser.add_argument("--title", help="figure title")
    parser.add_argument("--log-x", action="store_true", help="log-scale resolution axis")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    run_dir = workspace.directory("plot")
    inputs = []
    if args.reference is not None:
        model, null = reference_curve(args.reference)
        name = args.reference
    else:
        curves = args.curves or os.path.join(config.out, "evaluate", "curves.csv")
        if not os.path.exists(curves):
            raise ConfigError(f"{__name__}: {curves} not found; run evaluate or pass --curves/--reference")
        model, null = read_curves_csv(curves)
        inputs.append(curves)
        name = ""
    report = report_from_curves(model, null, config.spline_domain, name)

    flag = DisplayFlag()
    flag.log_x_axis = args.log_x
    curve_path = os.path.join(run_dir, "curves.csv")
    write_curves_csv(curve_path, model, null)
    image_path = CurveDisplayer().save(report, os.path.join(run_dir, "mae_curve.svg"), title=args.title,
                                       display_flag=flag)
    print(f"plot: null_resolution_km = {report.null_resolution}")
    finish_run("plot", config, run_dir, inputs=inputs, outputs=[curve_path, image_path])
    return 0
