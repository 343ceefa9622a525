"""
main.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence

import torch

from ..errors import ConfigError
from . import (
    ca_forecast_command,
    cluster_command,
    evaluate_command,
    ingest_command,
    likelihood_command,
    plot_command,
    sample_command,
    train_command,
)
from .argument_parser import ERROR_EXIT, ImperviaArgumentParser, error_line
from .impervia_config import ImperviaConfig

COMMANDS = {
    "ingest": ingest_command,
    "likelihood": likelihood_command,
    "cluster": cluster_command,
    "train": train_command,
    "sample": sample_command,
    "ca-forecast": ca_forecast_command,
    "evaluate": evaluate_command,
    "plot": plot_command,
}


def build_parser() -> ImperviaArgumentParser:
    parser = ImperviaArgumentParser(
        prog="impervia", description="Forecast imperviousness change with a conditional diffusion model.")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=ImperviaArgumentParser)
    subparsers.required = True
    for module in COMMANDS.values():
        module.add_parser(subparsers)
    return parser


def _parse_overrides(items: Sequence[str]) -> Dict[str, str]:
    overrides: Dict[str, str] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"{__name__}: --set expects KEY=VALUE, got {item!r}")
        overrides[key.strip()] = value.strip()
    return overrides


def load_config(args: argparse.Namespace) -> ImperviaConfig:
    """既定値 < 設定ファイル < --set < 個別のフラグ の順に上書きした設定."""
    config = ImperviaConfig.load(args.config) if args.config else ImperviaConfig()
    flags: Dict[str, Any] = _parse_overrides(args.overrides)
    flags.update({"seed": args.seed, "threads": args.threads, "out": args.out,
                  "train_steps": getattr(args, "steps", None)})
    return config.with_overrides(flags)


def main(argv: Optional[List[str]] = None) -> int:
    """
    impervia コマンドの入口. 終了コードを返す.
    0: 成功, 1: 入力や実行時のエラー, 2: 使い方の誤り.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args)
        torch.set_num_threads(config.threads)
        return int(COMMANDS[args.command].run(args, config))
    except (ValueError, OSError, RuntimeError) as err:
        sys.stderr.write(error_line(type(err).__name__, str(err)) + "\n")
        return ERROR_EXIT
