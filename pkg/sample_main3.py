"""
sample_main3.py
CA-Markov のベースラインで 10 年後の土地被覆を予測するサンプルプログラム.
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import impervia as imp


if __name__ == "__main__":
    series = imp.generate_series((96, 96), seed=1)

    # 16 クラスの土地被覆を 8 クラスにまとめてから使います.
    lc_2001 = imp.to_ca_classes(series.land_cover[2001])
    lc_2011 = imp.to_ca_classes(series.land_cover[2011])

    # 2001 -> 2011 の遷移から 2021 の土地被覆を予測します.
    forecast = imp.ca_forecast(lc_2001, lc_2011)
    print(f"iterations = {forecast.result.iterations}, converged = {forecast.result.converged}")
    print(f"target areas = {forecast.model.target_areas.round(1)}")

    # Developed 以外から Developed に変わった画素が, 不浸透化の予測になります.
    change = imp.imperv_change_binary(lc_2011, forecast.result.grid)
    print(f"newly developed pixels = {int(change.values[change.valid].sum())}")
    imp.save_grid(forecast.result.grid, "result/sample_main3_ca_2021.igrd")
