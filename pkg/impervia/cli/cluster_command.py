"""
cluster_command.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import os

from ..clustering.cluster_io import write_assignments, write_signatures, write_weights
from ..clustering.k_medoids import cluster
from ..clustering.temporal_signature import signature
from ..errors import ConfigError
from ..raster.tile_set import tile_id
from .argument_parser import add_common_arguments, keys_epilog
from .impervia_config import ImperviaConfig
from .workspace import Workspace, available_years, finish_run, imperviousness_path, load_years, tiles_for

KEYS = ("years", "holdout_years", "patch_side", "cluster_k", "signature_stat", "cluster_max_iter",
        "cluster_init", "seed", "out")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "cluster", help="cluster tiles by DTW over their imperviousness change signatures",
        epilog=keys_epilog(KEYS))
    add_common_arguments(parser)
    parser.add_argument("--data", metavar="DIR", help="ingest directory (default <out>/ingest)")


def run(args: argparse.Namespace, config: ImperviaConfig) -> int:
    workspace = Workspace(config.out)
    data_dir = workspace.data_dir(args.data)
    run_dir = workspace.directory("cluster")

    # 評価用の年は signature に入れない.
    years = [y for y in available_years(data_dir, "imp", config.years) if y < min(config.holdout_years, default=10**6)]
    if len(years) < 2:
        raise ConfigError(f"{__name__}: need imperviousness for at least 2 training years, found {years}")
    inputs = [imperviousness_path(data_dir, y) for y in years]
    grids = load_years(dict(zip(years, inputs)))

    tiles = tiles_for(grids[years[0]], config)
    signatures = [
        signature([tiles.crop(grids[y], index) for y in years], tile_id(index), config.signature_stat)
        for index in range(len(tiles))
    ]
    model = cluster(signatures, config.cluster_k, config.seed, max_iter=config.cluster_max_iter,
                    init=config.cluster_init, show_progress=True)

    paths = {
        "assignments": os.path.join(run_dir, "assignments.csv"),
        "weights": os.path.join(run_dir, "weights.csv"),
        "signatures": os.path.join(run_dir, "signatures.csv"),
        "medoids": os.path.join(run_dir, "medoids.csv"),
    }
    write_assignments(paths["assignments"], model)
    write_weights(paths["weights"], model)
    write_signatures(paths["signatures"], signatures)
    write_signatures(paths["medoids"], model.medoid_signatures)

    for label, ratio, weight, medoid in zip(model.labels, model.ratios, model.sampling_weights,
                                            model.medoid_signatures):
        print(f"cluster {label}: ratio={ratio:.4f} weight={weight:.4f} medoid={medoid.patch_id}")
    print(f"persistence_cluster={model.persistence_cluster()}")
    finish_run("cluster", config, run_dir, inputs=inputs, outputs=list(paths.values()))
    return 0
