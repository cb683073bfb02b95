#!/usr/bin/env python3
"""
grouptype entrypoint

Loads environment overrides from .env and runs the command-line interface.
"""

import logging
import sys

from dotenv import load_dotenv

# Load environment variables first so GROUPTYPE_* settings apply
load_dotenv()

from grouptype import __version__  # noqa: E402
from grouptype.cli import main  # noqa: E402

APP_NAME = "grouptype"


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logging.getLogger("GroupType").info(f"{APP_NAME} v{__version__} terminated by user")
        sys.exit(130)
