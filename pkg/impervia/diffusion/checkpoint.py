"""
checkpoint.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import hashlib
import os
import struct
from dataclasses import dataclass
from typing import BinaryIO, Dict, List, Mapping, Optional, Sequence

import numpy as np
import torch

from ..errors import CheckpointError

MAGIC = b"IDNP"
VERSION = 1
DIGEST_SIZE = 32


@dataclass
class Checkpoint:
    """IDNP から読んだ内容."""

    params: Dict[str, torch.Tensor]
    ema_params: Dict[str, torch.Tensor]
    config_digest: bytes


def config_digest(config_text: str) -> bytes:
    """設定テキストの SHA-256 (32 バイト)."""
    return hashlib.sha256(config_text.encode("utf-8")).digest()


def _write_section(stream: BinaryIO, tensors: Mapping[str, torch.Tensor]) -> None:
    stream.write(struct.pack("<I", len(tensors)))
    for name, tensor in tensors.items():
        encoded = name.encode("utf-8")
        body = tensor.detach().cpu().numpy().astype("<f4")
        stream.write(struct.pack("<H", len(encoded)))
        stream.write(encoded)
        stream.write(struct.pack("<B", body.ndim))
        stream.write(struct.pack(f"<{body.ndim}I", *body.shape))
        stream.write(body.tobytes(order="C"))


def _read_exact(stream: BinaryIO, size: int) -> bytes:
    data = stream.read(size)
    if len(data) != size:
        raise CheckpointError(f"{__name__}: checkpoint truncated ({len(data)} of {size} bytes)")
    return data


def _read_section(stream: BinaryIO) -> Dict[str, torch.Tensor]:
    (count,) = struct.unpack("<I", _read_exact(stream, 4))
    out: Dict[str, torch.Tensor] = {}
    for _ in range(count):
        (name_len,) = struct.unpack("<H", _read_exact(stream, 2))
        name = _read_exact(stream, name_len).decode("utf-8")
        (rank,) = struct.unpack("<B", _read_exact(stream, 1))
        dims = struct.unpack(f"<{rank}I", _read_exact(stream, 4 * rank))
        size = int(np.prod(dims, dtype=np.int64)) if rank else 1
        body = np.frombuffer(_read_exact(stream, 4 * size), dtype="<f4").reshape(dims)
        out[name] = torch.from_numpy(body.astype(np.float32))
    return out


def save_checkpoint(
    path: str,
    params: Mapping[str, torch.Tensor],
    ema_params: Mapping[str, torch.Tensor],
    digest: bytes,
) -> None:
    """
    IDNP 形式で保存する.
    magic, version (u16), 設定のダイジェスト (32 バイト), パラメータ, EMA パラメータの順.
    """
    if len(digest) != DIGEST_SIZE:
        raise CheckpointError(f"{__name__}: config digest must be {DIGEST_SIZE} bytes, got {len(digest)}")
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "wb") as stream:
        stream.write(MAGIC)
        stream.write(struct.pack("<H", VERSION))
        stream.write(digest)
        _write_section(stream, params)
        _write_section(stream, ema_params)


def load_checkpoint(path: str, expected_digest: Optional[bytes] = None) -> Checkpoint:
    """
    IDNP を読む. expected_digest を与えると設定の不一致を CheckpointError にする.
    """
    with open(path, "rb") as stream:
        if _read_exact(stream, 4) != MAGIC:
            raise CheckpointError(f"{__name__}: {path} is not an IDNP checkpoint")
        (version,) = struct.unpack("<H", _read_exact(stream, 2))
        if version != VERSION:
            raise CheckpointError(f"{__name__}: unsupported checkpoint version {version}")
        digest = _read_exact(stream, DIGEST_SIZE)
        params = _read_section(stream)
        ema = _read_section(stream)
        if stream.read(1):
            raise CheckpointError(f"{__name__}: trailing bytes after EMA section in {path}")

    if expected_digest is not None and digest != expected_digest:
        raise CheckpointError(f"{__name__}: checkpoint was trained with a different configuration")
    return Checkpoint(params, ema, digest)


def save_loss_history(path: str, history: Sequence[float]) -> None:
    """損失の履歴を step,loss の CSV にする."""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    lines: List[str] = ["step,loss"]
    lines.extend(f"{i},{loss:.9g}" for i, loss in enumerate(history, start=1))
    with open(path, "w", encoding="utf-8") as stream:
        stream.write("\n".join(lines) + "\n")


def load_loss_history(path: str) -> List[float]:
    """save_loss_history で書いた CSV を読む."""
    with open(path, encoding="utf-8") as stream:
        rows = stream.read().splitlines()
    if not rows or rows[0].strip() != "step,loss":
        raise CheckpointError(f"{__name__}: {path} is not a loss history CSV")
    return [float(row.split(",")[1]) for row in rows[1:] if row.strip()]
