"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .allocation import AllocationResult, AllocationState, allocate
from .ca_forecast import CaForecast, ca_forecast
from .ca_param import CaParam
from .imperv_change import imperv_change_binary
from .markov_model import MarkovModel, area_counts, fit_markov, format_matrix
from .suitability import neighborhood_fractions, suitability

__all__ = [
    "AllocationResult",
    "AllocationState",
    "allocate",
    "CaForecast",
    "ca_forecast",
    "CaParam",
    "imperv_change_binary",
    "MarkovModel",
    "area_counts",
    "fit_markov",
    "format_matrix",
    "neighborhood_fractions",
    "suitability",
]
