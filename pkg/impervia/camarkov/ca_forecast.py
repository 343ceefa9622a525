"""
ca_forecast.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from dataclasses import dataclass

from ..raster.grid import Grid
from .allocation import AllocationResult, AllocationState, allocate
from .ca_param import CaParam
from .markov_model import MarkovModel, fit_markov
from .suitability import suitability


@dataclass(frozen=True)
class CaForecast:
    model: MarkovModel
    result: AllocationResult


def ca_forecast(lc_a: Grid, lc_b: Grid, param: CaParam = CaParam(), show_progress: bool = False) -> CaForecast:
    """
    lc_a -> lc_b の遷移から 1 ステップ先の 8 クラス地図を予測する.
    """
    model = fit_markov(lc_a, lc_b, param.class_count)
    suit = suitability(lc_b, model, param.window, param.floor)
    state = AllocationState.initial(suit, lc_b)
    result = allocate(
        state,
        model.target_areas,
        eta=param.eta,
        tolerance=param.tolerance,
        max_iter=param.max_iter,
        show_progress=show_progress,
    )
    print(f"{__name__}: {result.iterations = }, {result.converged = }")
    return CaForecast(model, result)
