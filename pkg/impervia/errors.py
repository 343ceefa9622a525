"""
errors.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php


class GridFormatError(ValueError):
    """IGRD のマジックやバージョンが不正."""


class GridSchemaError(ValueError):
    """dtype と kind の組み合わせが不正."""


class GridIOError(OSError):
    """ファイル本体が途中で切れている."""


class GridKindError(ValueError):
    """連続値グリッドが必要な処理にカテゴリグリッドが渡された (またはその逆)."""


class GridDimensionError(ValueError):
    """セルサイズやタイルサイズがグリッドの大きさと合わない."""


class ShapeMismatchError(ValueError):
    """配列・グリッドの形が揃っていない."""


class ClassIndexError(ValueError):
    """クラス番号が凡例の範囲外."""


class ConfigError(ValueError):
    """設定ファイルやコマンドライン引数の値が不正."""


class TrainingDivergenceError(RuntimeError):
    """学習中に損失が NaN になった."""


class GradientError(RuntimeError):
    """勾配に NaN / Inf が含まれる."""


class CheckpointError(ValueError):
    """IDNP チェックポイントの読み込みに失敗した."""


class ManifestError(ValueError):
    """run.manifest の内容がファイルと一致しない."""


class SplitError(ValueError):
    """条件付け年が足りず分割を作れない."""
