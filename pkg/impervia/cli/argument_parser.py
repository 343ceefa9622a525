"""
argument_parser.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import argparse
import sys
from typing import NoReturn, Sequence

USAGE_EXIT = 2
ERROR_EXIT = 1


def error_line(kind: str, message: str) -> str:
    """機械的に読める1行のエラー表示."""
    return f"error: {kind}: " + " ".join(str(message).split())


class ImperviaArgumentParser(argparse.ArgumentParser):
    """
    使い方の誤りを1行で stderr に出し, 終了コード 2 で終わる ArgumentParser.
    """

    def error(self, message: str) -> NoReturn:
        sys.stderr.write(error_line("UsageError", f"{self.prog}: {message}") + "\n")
        sys.exit(USAGE_EXIT)


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """全サブコマンド共通の引数."""
    parser.add_argument("--config", metavar="PATH", help="key=value config file")
    parser.add_argument("--seed", type=int, help="master random seed (config key: seed)")
    parser.add_argument("--threads", type=int, help="torch intra-op threads (config key: threads)")
    parser.add_argument("--out", metavar="DIR", help="output root (config key: out, env IMPERVIA_OUT)")
    parser.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="override any config key")


def keys_epilog(keys: Sequence[str]) -> str:
    """--help に出す, そのサブコマンドが読む設定キーの一覧."""
    return "config keys: " + ", ".join(keys)
