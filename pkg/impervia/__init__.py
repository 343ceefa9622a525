"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


from .raster.grid import Grid, GridKind
from .raster.igrd_io import load_grid, save_grid
from .raster.tile_set import TileSet, tile
from .raster.synthetic_series import generate_series, make_toy_task
from .raster.lulc_legend import to_ca_classes
from .math.clamp_percent import latent_to_percent, percent_to_latent
from .transition.likelihood_map import likelihood_series
from .denoiser.default_denoiser_param import DefaultDenoiserParam
from .denoiser.denoiser_param_protocol import DenoiserParamProtocol
from .denoiser.unet import Denoiser, build_denoiser
from .denoiser.conditioning_stack import ConditioningStack
from .diffusion.forecast_dataset import ForecastDataset
from .diffusion.noise_schedule import make_schedule
from .diffusion.samplers import ddim_sample, ddpm_sample
from .diffusion.trainer import TrainParam, train
from .clustering.k_medoids import cluster
from .clustering.temporal_signature import signature
from .camarkov.ca_forecast import ca_forecast
from .camarkov.imperv_change import imperv_change_binary
from .evaluation.eval_report import evaluate, format_report, report_from_curves
from .evaluation.reference_curves import reference_curve
from .evaluation.null_resolution import null_resolution
from .render.curve_displayer import CurveDisplayer
from .render.display_flag import DisplayFlag
from .render.color_param import ColorParam
from .cli.impervia_config import ImperviaConfig

# パッケージのバージョンはsetup.pyに記載
# The package version is specified in setup.py

__all__ = [
    "Grid",
    "GridKind",
    "load_grid",
    "save_grid",
    "TileSet",
    "tile",
    "generate_series",
    "make_toy_task",
    "to_ca_classes",
    "latent_to_percent",
    "percent_to_latent",
    "likelihood_series",
    "DefaultDenoiserParam",
    "DenoiserParamProtocol",
    "Denoiser",
    "build_denoiser",
    "ConditioningStack",
    "ForecastDataset",
    "make_schedule",
    "ddim_sample",
    "ddpm_sample",
    "TrainParam",
    "train",
    "cluster",
    "signature",
    "ca_forecast",
    "imperv_change_binary",
    "evaluate",
    "format_report",
    "report_from_curves",
    "reference_curve",
    "null_resolution",
    "CurveDisplayer",
    "DisplayFlag",
    "ColorParam",
    "ImperviaConfig",
]
