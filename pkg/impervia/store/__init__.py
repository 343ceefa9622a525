"""
__init__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

from .run_manifest import (
    MANIFEST_NAME,
    RunManifest,
    file_digest,
    make_run_id,
    read_manifest,
    verify_manifest,
    write_manifest,
)
from .split_definition import SplitDefinition, conditioning_years, make_split

__all__ = [
    "MANIFEST_NAME",
    "RunManifest",
    "file_digest",
    "make_run_id",
    "read_manifest",
    "verify_manifest",
    "write_manifest",
    "SplitDefinition",
    "conditioning_years",
    "make_split",
]
