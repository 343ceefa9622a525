"""
igrd_io.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import os
import struct
from typing import Union

import numpy as np

from ..errors import GridFormatError, GridIOError, GridSchemaError
from .grid import Grid, GridKind

IGRD_MAGIC = b"IGRD"
IGRD_VERSION = 1

# magic(4s) version(u16) kind(u8) reserved(u8) width(u32) height(u32) pixel_size(f32) nodata(f32)
_HEADER = struct.Struct("<4sHBBIIff")

PathLike = Union[str, "os.PathLike[str]"]


def _body_dtype(kind: GridKind) -> np.dtype:
    if kind == GridKind.CONTINUOUS:
        return np.dtype("<f4")
    return np.dtype("u1")


def _nodata_matches(values: np.ndarray, nodata_value: float, kind: GridKind) -> np.ndarray:
    if kind == GridKind.CATEGORICAL:
        return values == np.uint8(int(nodata_value) & 0xFF)
    if np.isnan(nodata_value):
        return np.isnan(values)
    return values == np.float32(nodata_value)


def load_grid(path: PathLike) -> Grid:
    """
    IGRD ファイルを読み込む.

    Parameters
    ----------
    path : str or PathLike
        IGRD ファイルのパス.

    Returns
    -------
    grid : Grid
        読み込んだグリッド. nodata_value と一致する画素は nodata になる.

    Raises
    ------
    GridFormatError
        magic, version, 予約バイト (0 以外) の不正, または連続値の有効画素が 0 ~ 100 の外.
    """
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
        if len(header) < _HEADER.size:
            raise GridIOError(f"{__name__}: {path}: truncated header ({len(header)} bytes)")

        magic, version, kind_byte, reserved, width, height, pixel_size, nodata_value = _HEADER.unpack(header)
        if magic != IGRD_MAGIC:
            raise GridFormatError(f"{__name__}: {path}: bad magic {magic!r}")
        if version != IGRD_VERSION:
            raise GridFormatError(f"{__name__}: {path}: unsupported version {version}")
        if reserved != 0:
            raise GridFormatError(f"{__name__}: {path}: reserved header byte must be 0, got {reserved}")
        try:
            kind = GridKind(kind_byte)
        except ValueError as exc:
            raise GridSchemaError(f"{__name__}: {path}: unknown kind {kind_byte}") from exc

        dtype = _body_dtype(kind)
        expected = width * height * dtype.itemsize
        body = f.read(expected)
        if len(body) < expected:
            raise GridIOError(f"{__name__}: {path}: truncated body, {len(body)} of {expected} bytes")

    values = np.frombuffer(body, dtype=dtype).reshape(height, width)
    mask = _nodata_matches(values, nodata_value, kind)
    if kind == GridKind.CONTINUOUS:
        grid = Grid(values.astype(np.float64), kind, float(pixel_size), mask, float(nodata_value))
        try:
            grid.check_range(0.0, 100.0)
        except ValueError as exc:
            raise GridFormatError(f"{__name__}: {path}: {exc}") from exc
        return grid
    return Grid(values.copy(), kind, float(pixel_size), mask, float(nodata_value))


def save_grid(grid: Grid, path: PathLike) -> None:
    """
    グリッドを IGRD 形式で保存する. 連続値は float32, カテゴリは uint8.
    """
    dtype = _body_dtype(grid.kind)
    body = np.ascontiguousarray(grid.filled()).astype(dtype)
    if grid.kind == GridKind.CONTINUOUS and grid.valid.any():
        written = body[grid.valid]
        if np.any(_nodata_matches(written, grid.nodata_value, grid.kind)):
            raise GridSchemaError(f"{__name__}: a valid pixel equals the nodata value {grid.nodata_value}")

    header = _HEADER.pack(
        IGRD_MAGIC,
        IGRD_VERSION,
        int(grid.kind),
        0,
        grid.width,
        grid.height,
        float(grid.pixel_size),
        float(grid.nodata_value),
    )
    directory = os.path.dirname(os.fspath(path))
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as f:
        f.write(header)
        f.write(body.tobytes())
