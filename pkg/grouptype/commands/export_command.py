"""
`grouptype export TARGET OUT`: write a permutation target as a `.grp` file.
"""

import logging
from typing import Optional

from pydantic import BaseModel

from ..constructors import write_generator_file
from .common import CommandContext, CommandResult
from .targets import resolve_target

logger = logging.getLogger("ExportCommand")


class ExportReport(BaseModel):
    success: bool
    message: str
    target: str
    path: str
    order: int
    degree: Optional[int] = None
    generators: int


def cmd_export(target: str, out: str, ctx: CommandContext) -> CommandResult:
    group = resolve_target(target, ctx)
    path = write_generator_file(group, out, comment=f"{target}: order {group.order}")
    report = ExportReport(
        success=True,
        message=f"wrote {target} to {path}",
        target=target,
        path=str(path),
        order=group.order,
        degree=group.degree,
        generators=len(group.generators),
    )
    return CommandResult(report, report.message)
