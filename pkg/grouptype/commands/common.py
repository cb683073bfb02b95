"""
Shared plumbing for the command modules.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import pandas as pd
from pydantic import BaseModel

from ..config import Settings
from ..engine import DEFAULT_CAP


@dataclass
class CommandContext:
    data_dir: Path = Path("data")
    cap: int = DEFAULT_CAP
    max_workers: int = 4
    json_indent: int = 2

    @classmethod
    def from_settings(cls, settings: Settings, data_dir: Path) -> "CommandContext":
        return cls(
            data_dir=data_dir,
            cap=settings.enumeration.cap,
            max_workers=settings.enumeration.max_workers,
            json_indent=settings.output.json_indent,
        )


@dataclass
class CommandResult:
    report: BaseModel
    text: str
    exit_code: int = 0

    def render(self, as_json: bool, indent: int = 2) -> str:
        if as_json:
            return self.report.model_dump_json(indent=indent or None)
        return self.text


def counts_dict(counts: Dict[int, int]) -> Dict[str, int]:
    return {str(n): int(c) for n, c in counts.items()}


def table(rows: Sequence[dict], columns: Optional[List[str]] = None) -> str:
    """Plain fixed-width table; no colors so the text stays diffable."""
    if not rows:
        return "(empty)"
    frame = pd.DataFrame(list(rows), columns=columns)
    return frame.to_string(index=False)


def yes_no(flag: bool) -> str:
    return "yes" if flag else "no"
