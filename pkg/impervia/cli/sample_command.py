"""
sample_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os
from typing import Dict, List, Optional

import numpy as np
import torch
import tqdm  # type: ignore[import]

from ..clustering.cluster_io import read_persistence_label
from ..denoiser.unet import Denoiser, build_denoiser
from ..diffusion.checkpoint import load_checkpoint
from ..diffusion.samplers import ddim_sample, ddpm_sample
from ..errors import ConfigError
from ..math.clamp_percent import latent_to_percent
from ..math.seed_stream import derive_seed
from ..raster.grid import Grid
from ..raster.igrd_io import save_grid
from ..raster.tile_set import tile_id
from .argument_parser import add_common_arguments, keys_epilog
from .forecast_inputs import DEFAULT_MODEL, PERSIST, load_inputs, parse_checkpoints, route_tiles, tile_labels
from .impervia_config import MODEL_KEYS, ImperviaConfig
from .workspace import Workspace, finish_run, prediction_path, tiles_for

KEYS = MODEL_KEYS + ("ddim_steps", "ddim_eta", "seeds", "patch_side", "years", "holdout_years", "cond_lag",
                     "seed", "threads", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "sample", help="forecast target-year imperviousness for every tile and seed",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")
    parser.add_argument("--likelihood", metavar="DIR", help="likelihood directory (default <out>/likelihood)")
    parser.add_argument("--checkpoint", metavar="[LABEL=]PATH", action="append",
                        help="IDNP checkpoint for all tiles, or LABEL=PATH for the tiles of one cluster; "
                             "repeatable (default <out>/train/model.idnp)")
    parser.add_argument("--target", type=int, action="append", help="target year (default: holdout_years)")
    parser.add_argument("--weights", choices=("ema", "raw"), default="ema", help="parameter copy to use")
    parser.add_argument("--sampler", choices=("ddim", "ddpm"), default="ddim")
    parser.add_argument("--assignments", metavar="CSV",
                        help="cluster assignments; tiles of the persistence cluster are copied, not sampled")


def _load_model(path: str, config: ImperviaConfig, weights: str) -> Denoiser:
    checkpoint = load_checkpoint(path, config.model_digest())
    model = build_denoiser(config, config.seed)
    model.load_state_dict(checkpoint.ema_params if weights == "ema" else checkpoint.params)
    model.eval()
    return model


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    run_dir = workspace.directory("sample")
    checkpoints = parse_checkpoints(args.checkpoint or [os.path.join(config.out, "train", "model.idnp")])
    if set(checkpoints) - {DEFAULT_MODEL} and args.assignments is None:
        raise ConfigError(f"{__name__}: cluster checkpoints need --assignments")
    schedule = config.schedule()

    targets = args.target or list(config.holdout_years)
    inputs = load_inputs(workspace, config, targets, args.data, args.likelihood)
    input_paths: List[str] = list(inputs.paths) + list(checkpoints.values())
    tiles = tiles_for(inputs.imperviousness[inputs.years[0]], config)

    labels: List[Optional[str]] = [None] * len(tiles)
    persistence: Optional[str] = None
    if args.assignments is not None:
        input_paths.append(args.assignments)
        by_id = tile_labels(args.assignments)
        labels = [by_id.get(tile_id(i)) for i in range(len(tiles))]
        weights_csv = os.path.join(os.path.dirname(os.path.abspath(args.assignments)), "weights.csv")
        persistence = read_persistence_label(weights_csv) if os.path.exists(weights_csv) else None
    routes = route_tiles(labels, checkpoints, persistence)

    used = sorted(set(routes) - {PERSIST})
    models: Dict[str, Denoiser] = {route: _load_model(checkpoints[route], config, args.weights) for route in used}
    for route in sorted(set(routes)):
        source = f"last observed value (cluster {persistence})" if route == PERSIST else checkpoints[route]
        print(f"sample: {routes.count(route)} tiles -> {source}")

    outputs: List[str] = []
    for target in targets:
        cond_years = inputs.windows[target]
        past = inputs.imperviousness[cond_years[-1]]

        per_seed: List[List[Grid]] = [[] for _ in range(config.seeds)]
        for index in tqdm.tqdm(range(len(tiles)), desc=f"sample {target}"):
            past_tile = tiles.crop(past, index)
            if routes[index] == PERSIST:
                for s in range(config.seeds):
                    per_seed[s].append(past_tile)
                continue
            model = models[routes[index]]
            cond = inputs.stack(tiles, index, target).to_tensor()[None]
            for s in range(config.seeds):
                generator = torch.Generator().manual_seed(derive_seed(config.seed, target, index, s))
                if args.sampler == "ddim":
                    x = ddim_sample(model, cond, schedule, generator, config.ddim_steps, config.ddim_eta)
                else:
                    x = ddpm_sample(model, cond, schedule, generator)
                percent = latent_to_percent(x[0, 0].numpy().astype(np.float64))
                per_seed[s].append(past_tile.with_values(percent))

        for s, tile_grids in enumerate(per_seed):
            path = prediction_path(run_dir, target, s)
            save_grid(tiles.stitch(tile_grids, past), path)
            outputs.append(path)
        print(f"sample: target {target} from {list(cond_years)}, {len(tiles)} tiles x {config.seeds} seeds")

    finish_run("sample", config, run_dir, inputs=input_paths, outputs=outputs, seeds=list(range(config.seeds)))
    return 0
