"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .likelihood_map import LikelihoodMap, likelihood_map, likelihood_series
from .transition_tables import (
    TransitionTables,
    build_tables,
    collapse,
    crosstab,
    format_probs,
    normalize,
    parse_probs,
)

__all__ = [
    "LikelihoodMap",
    "likelihood_map",
    "likelihood_series",
    "TransitionTables",
    "build_tables",
    "collapse",
    "crosstab",
    "format_probs",
    "normalize",
    "parse_probs",
]
