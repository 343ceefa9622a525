"""
run_manifest.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import datetime
import hashlib
import os
import tempfile
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Sequence

from ..errors import ManifestError

MANIFEST_NAME = "run.manifest"


def file_digest(path: str) -> str:
    """ファイルの SHA-256 (16進)."""
    sha = hashlib.sha256()
    with open(path, "rb") as stream:
        for chunk in iter(lambda: stream.read(1 << 20), b""):
            sha.update(chunk)
    return sha.hexdigest()


def make_run_id(command: str, config: Mapping[str, str], seeds: Sequence[int]) -> str:
    """設定とシードだけから決まる run id."""
    text = command + "\n" + "\n".join(f"{k}={config[k]}" for k in sorted(config))
    text += "\nseeds=" + ",".join(str(s) for s in seeds)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def _now() -> str:
    return datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass
class RunManifest:
    """
    1回の実行の記録. config と seeds があれば同じ結果を再現できる.
    inputs / outputs のパスはマニフェストのあるディレクトリからの相対パス (別ドライブのときだけ絶対パス).
    """

    run_id: str
    command: str
    config: Dict[str, str]
    seeds: List[int]
    inputs: Dict[str, str] = field(default_factory=dict)  # path -> sha256
    outputs: Dict[str, str] = field(default_factory=dict)  # path -> sha256
    started: str = ""
    finished: str = ""

    @classmethod
    def create(
        cls,
        command: str,
        config: Mapping[str, str],
        seeds: Sequence[int],
        *,
        inputs: Sequence[str] = (),
        outputs: Sequence[str] = (),
        base_dir: str = ".",
        started: Optional[str] = None,
    ) -> "RunManifest":
        """ファイルのダイジェストを計算してマニフェストを作る."""
        manifest = cls(make_run_id(command, config, seeds), command, dict(config), list(seeds),
                       started=started or _now())
        for path in inputs:
            manifest.inputs[_relative(path, base_dir)] = file_digest(path)
        for path in outputs:
            manifest.outputs[_relative(path, base_dir)] = file_digest(path)
        manifest.finished = _now()
        return manifest

    def without_timestamps(self) -> "RunManifest":
        return replace(self, started="", finished="")

    def to_text(self) -> str:
        lines = [
            f"run_id={self.run_id}",
            f"command={self.command}",
            f"started={self.started}",
            f"finished={self.finished}",
            "seeds=" + ",".join(str(s) for s in self.seeds),
        ]
        lines.extend(f"config.{key}={value}" for key, value in self.config.items())
        lines.extend(f"input.{path}={digest}" for path, digest in self.inputs.items())
        lines.extend(f"output.{path}={digest}" for path, digest in self.outputs.items())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunManifest":
        manifest = cls("", "", {}, [])
        for number, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            # パスに "=" が含まれても値 (ダイジェスト) には含まれないので右から分ける.
            key, sep, value = line.rpartition("=") if line.startswith(("input.", "output.")) else line.partition("=")
            if not sep:
                raise ManifestError(f"{__name__}: line {number} is not key=value: {line!r}")
            if key.startswith("config."):
                manifest.config[key[len("config."):]] = value
            elif key.startswith("input."):
                manifest.inputs[key[len("input."):]] = value
            elif key.startswith("output."):
                manifest.outputs[key[len("output."):]] = value
            elif key == "seeds":
                manifest.seeds = [int(s) for s in value.split(",") if s]
            elif key in ("run_id", "command", "started", "finished"):
                setattr(manifest, key, value)
            else:
                raise ManifestError(f"{__name__}: unknown manifest key {key!r} on line {number}")
        if not manifest.run_id:
            raise ManifestError(f"{__name__}: manifest has no run_id")
        return manifest


def _relative(path: str, base_dir: str) -> str:
    """base_dir からの相対パス. 作業ディレクトリには依存しない. 別ドライブなら絶対パス."""
    full = os.path.abspath(path)
    try:
        return os.path.relpath(full, os.path.abspath(base_dir)).replace(os.sep, "/")
    except ValueError:
        return full


def write_manifest(manifest: RunManifest, path: str) -> None:
    """一時ファイルに書いてから置き換える."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix=".manifest-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as stream:
            stream.write(manifest.to_text())
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


def read_manifest(path: str) -> RunManifest:
    with open(path, encoding="utf-8") as stream:
        return RunManifest.from_text(stream.read())


def verify_manifest(path: str) -> None:
    """
    マニフェストに記録したファイルのダイジェストを計算し直し, 違えば ManifestError.
    """
    manifest = read_manifest(path)
    base_dir = os.path.dirname(os.path.abspath(path))
    for rel, digest in list(manifest.inputs.items()) + list(manifest.outputs.items()):
        full = rel if os.path.isabs(rel) else os.path.normpath(os.path.join(base_dir, rel))
        if not os.path.exists(full):
            raise ManifestError(f"{__name__}: {rel} listed in manifest is missing")
        actual = file_digest(full)
        if actual != digest:
            raise ManifestError(f"{__name__}: digest mismatch for {rel}: {actual} != {digest}")
