"""
evaluate_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
import sys
from typing import List

from ..errors import ConfigError
from ..evaluation.confusion import change_mask, confusion
from ..evaluation.eval_report import evaluate, format_report, report_from_curves, write_report
from ..evaluation.reference_curves import REFERENCE_CURVES, reference_curve
from ..raster.igrd_io import load_grid
from ..store.split_definition import conditioning_years
from .argument_parser import add_common_arguments, keys_epilog
from .forecast_inputs import tile_labels, tile_mask, tiles_with_label
from .impervia_config import ImperviaConfig
from .workspace import Workspace, available_years, finish_run, imperviousness_path, prediction_paths, tiles_for

KEYS = ("scales", "spline_domain", "patch_side", "years", "holdout_years", "cond_lag", "n_cond", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "evaluate", help="MAE curves, null resolution and change confusion against the no-change model",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")
    parser.add_argument("--target", type=int, help="target year (default: first of holdout_years)")
    parser.add_argument("--pred", action="append", metavar="IGRD", help="prediction per seed (default: sample output)")
    parser.add_argument("--past", metavar="IGRD", help="last observation used by the no-change model")
    parser.add_argument("--truth", metavar="IGRD", help="observed imperviousness of the target year")
    parser.add_argument("--reference", choices=sorted(REFERENCE_CURVES), help="evaluate a built-in reference curve")
    parser.add_argument("--assignments", metavar="CSV", help="cluster assignments (with --cluster)")
    parser.add_argument("--cluster", metavar="LABEL", help="restrict the evaluation to one cluster")
    parser.add_argument("--ca-change", metavar="IGRD", help="CA-Markov change map to score against the truth")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    run_dir = workspace.directory("evaluate")

    if args.reference is not None:
        model, null = reference_curve(args.reference)
        report = report_from_curves(model, null, config.spline_domain, args.reference)
        sys.stdout.write(format_report(report))
        outputs = write_report(run_dir, report)
        finish_run("evaluate", config, run_dir, outputs=outputs)
        return 0

    data_dir = workspace.data_dir(args.data)
    target = args.target if args.target is not None else (config.holdout_years[0] if config.holdout_years else None)
    if target is None:
        raise ConfigError(f"{__name__}: no --target and no holdout_years")
    pred_paths: List[str] = args.pred or prediction_paths(workspace.directory("sample"), target)
    if not pred_paths:
        raise ConfigError(f"{__name__}: no predictions for {target}; run sample or pass --pred")
    truth_path = args.truth or imperviousness_path(data_dir, target)
    past_path = args.past
    if past_path is None:
        years = available_years(data_dir, "imp", config.years)
        past_path = imperviousness_path(data_dir, conditioning_years(years, target, config.cond_lag, 1)[-1])

    preds = [load_grid(p) for p in pred_paths]
    past = load_grid(past_path)
    truth = load_grid(truth_path)
    inputs = pred_paths + [past_path, truth_path]

    mask = None
    name = str(target)
    if args.cluster is not None:
        if args.assignments is None:
            raise ConfigError(f"{__name__}: --cluster needs --assignments")
        tiles = tiles_for(truth, config)
        mask = tile_mask(tiles, tiles_with_label(tiles, tile_labels(args.assignments), args.cluster))
        inputs.append(args.assignments)
        name = f"{target} cluster {args.cluster}"

    report = evaluate(preds, past, truth, config.scales, spline_domain=config.spline_domain, mask=mask, name=name)
    text = format_report(report)
    if args.ca_change is not None:
        ca = confusion(load_grid(args.ca_change), change_mask(past, truth))
        inputs.append(args.ca_change)
        text += (f"ca_tp = {ca.tp}\nca_fp = {ca.fp}\nca_fn = {ca.fn}\n"
                 f"ca_precision = {ca.precision:.2f}\nca_recall = {ca.recall:.2f}\nca_f1 = {ca.f1:.2f}\n")

    sys.stdout.write(text)
    outputs = write_report(run_dir, report)
    with open(outputs[0], "w", encoding="utf-8") as stream:
        stream.write(text)
    finish_run("evaluate", config, run_dir, inputs=inputs, outputs=outputs)
    return 0
