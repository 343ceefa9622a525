"""
mae_curve_renderer.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Optional

from matplotlib import axes

from ..evaluation.mae_curve import MaeCurve
from ..evaluation.null_resolution import NullResolution
from .color_param import ColorParam
from .display_flag import DisplayFlag


class MaeCurveRenderer:
    """
    解像度ごとの MAE の曲線を描画するクラス.
    予測モデルと変化なしモデルの曲線, および両者が交わる解像度を描く.
    """

    def __init__(
        self,
        ax: axes.Axes,
        *,
        color_param: ColorParam = ColorParam(),
        display_flag: DisplayFlag = DisplayFlag(),
    ) -> None:
        """
        コンストラクタ

        Parameters
        ----------
        ax : matplotlib.axes.Axes
            描画対象のAxesオブジェクト.
        color_param : ColorParam, optional
            グラフの色や透明度のパラメータ.
        display_flag : DisplayFlag, optional
            描画オプションのフラグ.
        """
        self._ax = ax
        self._color_param = color_param
        self._display_flag = display_flag

    def render(
        self,
        model: MaeCurve,
        null: MaeCurve,
        resolution: Optional[NullResolution] = None,
        mae_at_nr: Optional[float] = None,
        *,
        label: str = "diffusion",
    ) -> None:
        """曲線を描画する."""
        print(f"{__name__}: Starts drawing MAE curves ({len(model)} scales)")

        marker = "o" if self._display_flag.display_markers else None
        self._ax.plot(  # type: ignore
            model.scales, model.values, marker=marker, label=label,
            color=self._color_param.model_curve_color, alpha=self._color_param.model_curve_alpha)

        if self._display_flag.display_null_curve:
            self._ax.plot(  # type: ignore
                null.scales, null.values, marker=marker, label="null (persistence)",
                color=self._color_param.null_curve_color, alpha=self._color_param.null_curve_alpha)

        if self._display_flag.display_null_resolution and resolution is not None and resolution.km is not None:
            self._ax.axvline(  # type: ignore
                resolution.km, linestyle="--",
                color=self._color_param.null_resolution_color,
                alpha=self._color_param.null_resolution_alpha)
            if mae_at_nr is not None:
                self._ax.annotate(  # type: ignore
                    f"({resolution.km:.2f},{mae_at_nr:.2f})", (resolution.km, mae_at_nr),
                    textcoords="offset points", xytext=(5, 5))

        if self._display_flag.log_x_axis:
            self._ax.set_xscale("log", base=2)  # type: ignore
        if self._display_flag.display_grid:
            self._ax.grid(True, color=self._color_param.grid_color, alpha=self._color_param.grid_alpha)  # type: ignore
        self._ax.set_xlabel("Resolution [km]")  # type: ignore
        self._ax.set_ylabel("MAE [%]")  # type: ignore
        self._ax.legend()  # type: ignore
