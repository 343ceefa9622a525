"""
sample_main1.py
合成した土地被覆の時系列から不浸透化の尤度マップを作る基本的なサンプルプログラム.
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


import impervia as imp


if __name__ == "__main__":
    # まずは，合成の時系列を作ってください．
    # 実際のデータを使う場合は impervia ingest で IGRD に変換し, load_grid で読み込みます.
    series = imp.generate_series((128, 128), seed=0)

    # 年の古い順に土地被覆を並べて likelihood_series を呼ぶと, 年ごとの尤度マップが得られます.
    # 最後の年の尤度マップは, 最後の組の遷移確率をその年の土地被覆に当てはめて作られます.
    # 予測の条件付けに使うときは目標年の条件付け窓の年だけを渡します. impervia likelihood は目標年ごとにそうしています.
    land_covers = [series.land_cover[y] for y in series.years]
    maps = imp.likelihood_series(land_covers)

    for year, lmap in zip(series.years, maps):
        values = lmap.grid.values[lmap.grid.valid]
        print(f"{year}: mean likelihood = {values.mean():.4f}, source = {lmap.source}")

    # 尤度マップも Grid なので, そのまま IGRD 形式で保存できます.
    imp.save_grid(maps[-1].grid, "result/sample_main1_likelihood.igrd")
