"""
sample_main2.py
公開されている MAE 曲線から null resolution を求め, グラフを描くサンプルプログラム.
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import impervia as imp


if __name__ == "__main__":
    # reference_curve で組み込みの曲線 (予測モデル, 変化なしモデル) を取り出せます.
    # "all", "vegas", "chicago", "cluster-a" ~ "cluster-d" が選べます.
    for name in ("all", "vegas", "chicago", "cluster-a", "cluster-d"):
        model, null = imp.reference_curve(name)
        report = imp.report_from_curves(model, null, name=name)
        print(f"{name}: null resolution = {report.null_resolution} km")

    # DisplayFlag でグラフの表示を切り替えることができます.
    flag = imp.DisplayFlag()
    flag.log_x_axis = True
    flag.display_markers = True

    model, null = imp.reference_curve("all")
    report = imp.report_from_curves(model, null, name="All AOIs")
    print(imp.format_report(report))

    imp.CurveDisplayer().save(
        report,
        # 拡張子で形式が決まります (.svg, .png など).
        "result/sample_main2.svg",
        display_flag=flag,
    )
