"""
geotiff_converter.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from typing import Union
import os


def convert_geotiff(source: Union[str, "os.PathLike[str]"], destination: Union[str, "os.PathLike[str]"]) -> None:
    """
    GeoTIFF を IGRD に変換する (未実装).

    変換するとしたら次の手順になる.

    1. 1 バンド目を読み, NLCD の LULC なら uint8 のクラスコード,
       不浸透率なら 0 ~ 100 の値として取り出す.
    2. GeoTIFF の nodata 値 (NLCD は 127 / 250 など) を nodata マスクにする.
    3. LULC は LulcLegend.nlcd16().from_codes でクラス番号 0 ~ 15 に変換する.
    4. ジオトランスフォームの画素サイズ [m] を pixel_size に入れ, save_grid で書く.

    投影変換や座標系の情報は IGRD に持たない.
    現在は numpy の .npy 配列を `impervia ingest` で取り込むこと.
    """
    raise NotImplementedError(
        f"{__name__}: GeoTIFF conversion is not supported ({source} -> {destination}); "
        "export the band to .npy and use `impervia ingest`"
    )
