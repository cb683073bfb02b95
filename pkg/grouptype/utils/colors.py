"""
ANSI color codes for log output.
"""

import os
import sys


class Colors:
    RESET = "\033[0m"
    RED = "\033[91m"     # Failed checks
    GREEN = "\033[92m"   # Passed checks
    YELLOW = "\033[93m"  # Warnings and highlights
    BLUE = "\033[94m"    # Progress
    BOLD = "\033[1m"     # Headers


def _enabled() -> bool:
    if os.getenv("NO_COLOR"):
        return False
    return sys.stderr.isatty()


def paint(text: str, color: str) -> str:
    """Wrap text in a color when stderr is a terminal."""
    if not _enabled():
        return text
    return f"{color}{text}{Colors.RESET}"


def status(ok: bool, yes: str = "OK", no: str = "FAILED") -> str:
    return paint(yes, Colors.GREEN) if ok else paint(no, Colors.RED)
