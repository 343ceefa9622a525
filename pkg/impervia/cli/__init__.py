"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


from .argument_parser import ERROR_EXIT, USAGE_EXIT, ImperviaArgumentParser, error_line
from .impervia_config import MODEL_KEYS, ImperviaConfig
from .main import COMMANDS, build_parser, load_config, main

__all__ = [
    "ERROR_EXIT",
    "USAGE_EXIT",
    "ImperviaArgumentParser",
    "error_line",
    "MODEL_KEYS",
    "ImperviaConfig",
    "COMMANDS",
    "build_parser",
    "load_config",
    "main",
]
