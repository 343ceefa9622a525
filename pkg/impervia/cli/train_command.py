"""
train_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
from typing import List, Optional

from ..clustering.cluster_io import label_weights, read_assignments
from ..denoiser.unet import build_denoiser
from ..diffusion.checkpoint import save_checkpoint, save_loss_history
from ..diffusion.forecast_dataset import ForecastDataset
from ..diffusion.trainer import train
from ..errors import ConfigError
from ..raster.tile_set import tile_id
from ..store.split_definition import make_split
from .argument_parser import add_common_arguments, keys_epilog
from .forecast_inputs import load_inputs, tile_labels, tiles_with_label
from .impervia_config import MODEL_KEYS, ImperviaConfig
from .workspace import Workspace, filled_percent, finish_run, tiles_for

KEYS = MODEL_KEYS + ("learning_rate", "ema_rate", "train_steps", "batch_size", "patch_side", "years",
                     "target_years", "holdout_years", "cond_lag", "seed", "threads", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "train", help="train the conditional denoiser on (target, conditioning) tile pairs",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")
    parser.add_argument("--likelihood", metavar="DIR", help="likelihood directory (default <out>/likelihood)")
    parser.add_argument("--steps", type=int, help="training steps (config key: train_steps)")
    parser.add_argument("--assignments", metavar="CSV", help="cluster assignments for reverse-weight sampling")
    parser.add_argument("--cluster", metavar="LABEL", help="train a specialist on one cluster (needs --assignments)")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    run_dir = workspace.directory("train")
    inputs = load_inputs(workspace, config, config.target_years, args.data, args.likelihood)
    tiles = tiles_for(inputs.imperviousness[inputs.years[0]], config)
    split = make_split(tiles, inputs.years, config.target_years, (), config.cond_lag, config.n_cond)

    indices = [i for i, frac in enumerate(tiles.nodata_fractions) if frac < 1.0]
    weight_of: Optional[dict] = None
    input_paths: List[str] = list(inputs.paths)
    if args.cluster is not None and args.assignments is None:
        raise ConfigError(f"{__name__}: --cluster needs --assignments")
    if args.assignments is not None:
        input_paths.append(args.assignments)
        if args.cluster is not None:
            chosen = set(tiles_with_label(tiles, tile_labels(args.assignments), args.cluster))
            indices = [i for i in indices if i in chosen]
        else:
            weight_of = label_weights(read_assignments(args.assignments))

    targets = []
    stacks = []
    weights = []
    for target, _ in split.training_pairs:
        truth = inputs.imperviousness[target]
        for index in indices:
            targets.append(filled_percent(tiles.crop(truth, index)))
            stacks.append(inputs.stack(tiles, index, target))
            if weight_of is not None:
                weights.append(weight_of.get(tile_id(index), 0.0))
    if not stacks:
        raise ConfigError(f"{__name__}: no training samples")
    dataset = ForecastDataset.from_stacks(targets, stacks, weights if weight_of is not None else None)
    print(f"train: {len(dataset)} samples from pairs {list(split.training_pairs)}")

    model = build_denoiser(config, config.seed)
    result = train(model, dataset, config.schedule(), config.train_param())

    # 専用モデルは model_<LABEL>.idnp に分けて書く.
    suffix = f"_{args.cluster}" if args.cluster is not None else ""
    checkpoint_path = os.path.join(run_dir, f"model{suffix}.idnp")
    loss_path = os.path.join(run_dir, f"loss{suffix}.csv")
    split_path = os.path.join(run_dir, f"split{suffix}.txt")
    save_checkpoint(checkpoint_path, result.params, result.ema_params, config.model_digest())
    save_loss_history(loss_path, result.loss_history)
    with open(split_path, "w", encoding="utf-8") as stream:
        stream.write(split.to_text())
    finish_run("train", config, run_dir, inputs=input_paths, outputs=[checkpoint_path, loss_path, split_path])
    return 0
