"""
__main__.py
"""

# Copyright (c) 2023-2025 Taisei Hasegawa
# Released under the MIT license
# https://opensource.org/licenses/mit-license.php

import sys
from typing import List, Optional

from .cli.main import main as cli_main


def main(argv: Optional[List[str]] = None) -> int:
    """
    python -m impervia <command> ... の入口.
    """
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
