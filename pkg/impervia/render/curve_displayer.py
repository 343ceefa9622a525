"""
curve_displayer.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
from typing import Optional

import matplotlib as mpl
import matplotlib.pyplot as plt

from ..evaluation.eval_report import EvalReport
from .color_param import ColorParam
from .display_flag import DisplayFlag
from .mae_curve_renderer import MaeCurveRenderer

# ファイルに書き出すだけなので画面のないバックエンドを使う.
mpl.use("Agg")
mpl.rcParams["svg.hashsalt"] = "impervia"


class CurveDisplayer:
    """
    EvalReport の MAE 曲線を SVG などの画像に書き出すクラス．
    """

    def save(
        self,
        report: EvalReport,
        image_file_name: str = "result/mae_curve.svg",
        *,
        title: Optional[str] = None,
        display_flag: DisplayFlag = DisplayFlag(),
        color_param: ColorParam = ColorParam(),
    ) -> str:
        """
        曲線を描いて image_file_name に保存し, そのパスを返す．
        拡張子で形式が決まる (.svg, .png など)．
        """
        fig = plt.figure()  # type: ignore
        ax = fig.add_subplot(1, 1, 1)  # type: ignore

        renderer = MaeCurveRenderer(ax, color_param=color_param, display_flag=display_flag)
        renderer.render(report.model_curve, report.null_curve, report.null_resolution, report.mae_at_nr)
        ax.set_title(title if title is not None else (report.name or "MAE vs Resolution"))  # type: ignore

        os.makedirs(os.path.dirname(os.path.abspath(image_file_name)), exist_ok=True)
        # SVG の中に日時やランダムな id を入れず, 同じ入力から同じファイルができるようにする.
        fig.savefig(image_file_name, metadata={"Date": None} if image_file_name.endswith(".svg") else None)  # type: ignore
        plt.close(fig)
        print(f"{__name__}: saved {image_file_name}")
        return image_file_name
