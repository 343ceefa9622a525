"""
impervia_config.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import dataclasses
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Tuple

from ..camarkov.ca_param import CaParam
from ..clustering.k_medoids import CLUSTER_INITS
from ..clustering.temporal_signature import SIGNATURE_STATS
from ..diffusion.checkpoint import config_digest
from ..diffusion.noise_schedule import NoiseSchedule, make_schedule
from ..diffusion.trainer import TrainParam
from ..errors import ConfigError
from ..evaluation.null_resolution import SPLINE_DOMAINS
from ..raster.synthetic_series import NLCD_YEARS

# チェックポイントの互換性を決めるキー. これ以外の設定は学習済みモデルをそのまま使える.
MODEL_KEYS = (
    "schedule_steps", "beta_start", "beta_end", "depth", "base_channels", "gn_groups",
    "embed_dim", "n_cond", "input_side", "spade_hidden",
)


def _default_out() -> str:
    return os.environ.get("IMPERVIA_OUT", "result")


@dataclass
class ImperviaConfig:
    """
    実行時の設定. key=value のテキストから読み, コマンドラインの値で上書きする.
    DenoiserParamProtocol を満たすので, そのまま Denoiser に渡せる.
    """

    # 拡散
    schedule_steps: int = 1000
    beta_start: float = 1e-4
    beta_end: float = 0.02
    # UNet
    depth: int = 3
    base_channels: int = 8
    gn_groups: int = 4
    embed_dim: int = 32
    n_cond: int = 3
    input_side: int = 32
    spade_hidden: int = 16
    # 学習
    learning_rate: float = 3e-4
    ema_rate: float = 0.99
    train_steps: int = 5000
    batch_size: int = 16
    # サンプリング
    ddim_steps: int = 500
    ddim_eta: float = 0.0
    seeds: int = 5
    # データ
    patch_side: int = 32
    pixel_size: float = 30.0  # [m]
    years: Tuple[int, ...] = NLCD_YEARS
    target_years: Tuple[int, ...] = (2016, 2019)
    holdout_years: Tuple[int, ...] = (2021,)
    cond_lag: int = 10
    # 評価
    scales: Tuple[int, ...] = (4, 8, 16, 32, 64, 128)
    spline_domain: str = "linear"
    # クラスタリング
    cluster_k: int = 5
    signature_stat: str = "mean_change"
    cluster_max_iter: int = 100
    cluster_init: str = "build"
    # CA-Markov
    ca_window: int = CaParam.window
    ca_eta: float = CaParam.eta
    ca_tolerance: float = CaParam.tolerance
    ca_max_iter: int = CaParam.max_iter
    ca_floor: float = CaParam.floor
    # 実行
    threads: int = 1
    seed: int = 0
    out: str = field(default_factory=_default_out)

    @classmethod
    def keys(cls) -> Tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(cls))

    @classmethod
    def from_text(cls, text: str, source: str = "<config>") -> "ImperviaConfig":
        """key=value の行を読む. # 以降はコメント."""
        values: Dict[str, str] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"{__name__}: {source}:{number}: expected key=value, got {raw!r}")
            values[key.strip()] = value.strip()
        return cls().with_overrides(values)

    @classmethod
    def load(cls, path: str) -> "ImperviaConfig":
        with open(path, encoding="utf-8") as stream:
            return cls.from_text(stream.read(), path)

    def with_overrides(self, overrides: Mapping[str, Any]) -> "ImperviaConfig":
        """値を差し替えた新しい設定を返す. 文字列なら型を変換する."""
        known = {f.name: f for f in dataclasses.fields(self)}
        changes: Dict[str, Any] = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise ConfigError(f"{__name__}: unknown config key {key!r}")
            changes[key] = _convert(key, value, getattr(self, key))
        config = dataclasses.replace(self, **changes)
        config.validate()
        return config

    def validate(self) -> None:
        """各モジュールの前提条件を満たすかを調べる."""
        def check(ok: bool, message: str) -> None:
            if not ok:
                raise ConfigError(f"{__name__}: {message}")

        check(self.schedule_steps >= 1, f"schedule_steps must be >= 1, got {self.schedule_steps}")
        check(0.0 < self.beta_start <= self.beta_end < 1.0,
              f"need 0 < beta_start <= beta_end < 1, got {self.beta_start}, {self.beta_end}")
        check(self.depth >= 1 and self.base_channels >= 1 and self.embed_dim >= 1,
              "depth, base_channels and embed_dim must be positive")
        check(self.gn_groups >= 1 and self.base_channels % self.gn_groups == 0,
              f"gn_groups={self.gn_groups} must divide base_channels={self.base_channels}")
        check(self.n_cond >= 1 and self.spade_hidden >= 1, "n_cond and spade_hidden must be positive")
        check(self.input_side % 2 ** (self.depth - 1) == 0,
              f"input_side={self.input_side} must be divisible by 2**(depth-1)")
        check(self.patch_side == self.input_side,
              f"patch_side={self.patch_side} must equal input_side={self.input_side}")
        check(self.learning_rate >= 0.0, "learning_rate must be >= 0")
        check(0.0 <= self.ema_rate <= 1.0, "ema_rate must be in [0, 1]")
        check(self.train_steps >= 0 and self.batch_size >= 1, "train_steps >= 0 and batch_size >= 1 required")
        check(1 <= self.ddim_steps <= self.schedule_steps,
              f"ddim_steps must be in [1, schedule_steps], got {self.ddim_steps}")
        check(0.0 <= self.ddim_eta <= 1.0, "ddim_eta must be in [0, 1]")
        check(self.seeds >= 1, "seeds must be >= 1")
        check(self.pixel_size > 0.0, "pixel_size must be positive")
        check(len(self.scales) >= 4 and list(self.scales) == sorted(set(self.scales)) and self.scales[0] >= 1,
              f"scales must be at least 4 increasing cell sizes, got {self.scales}")
        check(self.spline_domain in SPLINE_DOMAINS, f"spline_domain must be one of {SPLINE_DOMAINS}")
        check(self.cluster_k >= 1 and self.cluster_max_iter >= 0, "cluster_k >= 1 and cluster_max_iter >= 0")
        check(self.signature_stat in SIGNATURE_STATS, f"signature_stat must be one of {SIGNATURE_STATS}")
        check(self.cluster_init in CLUSTER_INITS, f"cluster_init must be one of {CLUSTER_INITS}")
        check(self.ca_window >= 1 and self.ca_window % 2 == 1, f"ca_window must be odd, got {self.ca_window}")
        check(self.ca_eta >= 0.0 and self.ca_tolerance >= 0.0 and self.ca_floor >= 0.0,
              "ca_eta, ca_tolerance and ca_floor must be >= 0")
        check(self.ca_max_iter >= 1, "ca_max_iter must be >= 1")
        check(len(self.years) >= 2 and list(self.years) == sorted(set(self.years)),
              f"years must be increasing, got {self.years}")
        for y in self.target_years + self.holdout_years:
            check(y in self.years, f"year {y} is not listed in years")
        check(not set(self.target_years) & set(self.holdout_years), "target_years and holdout_years overlap")
        check(self.cond_lag >= 0, "cond_lag must be >= 0")
        check(self.threads >= 1, "threads must be >= 1")
        check(self.seed >= 0, "seed must be >= 0")

    def snapshot(self) -> Dict[str, str]:
        """すべてのキーの値を文字列にした辞書 (マニフェスト用)."""
        return {key: _format(getattr(self, key)) for key in self.keys()}

    def to_text(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.snapshot().items())

    def model_digest(self) -> bytes:
        """チェックポイントに埋め込むダイジェスト."""
        return config_digest("".join(f"{k}={_format(getattr(self, k))}\n" for k in MODEL_KEYS))

    def schedule(self) -> NoiseSchedule:
        return make_schedule(self.schedule_steps, self.beta_start, self.beta_end)

    def ca_param(self) -> CaParam:
        param = CaParam()
        param.window = self.ca_window
        param.eta = self.ca_eta
        param.tolerance = self.ca_tolerance
        param.max_iter = self.ca_max_iter
        param.floor = self.ca_floor
        return param

    def train_param(self, show_progress: bool = True) -> TrainParam:
        return TrainParam(self.learning_rate, self.ema_rate, self.train_steps, self.batch_size, self.seed,
                          show_progress)


def _format(value: Any) -> str:
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _convert(key: str, value: Any, default: Any) -> Any:
    try:
        if isinstance(default, tuple):
            if isinstance(value, str):
                return tuple(int(v) for v in value.split(",") if v.strip())
            return tuple(int(v) for v in value)
        if isinstance(default, bool):
            return value if isinstance(value, bool) else str(value).lower() in ("1", "true", "yes")
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float):
            return float(value)
        return str(value)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"{__name__}: invalid value {value!r} for {key}: {err}") from err
