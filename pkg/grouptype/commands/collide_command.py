"""
`grouptype collide T...`: group targets by exponent type and report classes
with more than one member.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Sequence

from pydantic import BaseModel

from ..engine import is_solvable
from ..errors import DataError
from ..spectra import exponent_type, fingerprint
from ..utils.colors import Colors, paint
from .common import CommandContext, CommandResult, table, yes_no
from .targets import resolve_targets

logger = logging.getLogger("CollideCommand")


class TargetSummary(BaseModel):
    target: str
    order: int
    solvable: bool
    fingerprint: str


class CollisionClass(BaseModel):
    fingerprint: str
    members: List[str]
    mixed_solvability: bool


class CollideReport(BaseModel):
    success: bool
    message: str
    targets: List[TargetSummary]
    collisions: List[CollisionClass]


def cmd_collide(targets: Sequence[str], ctx: CommandContext) -> CommandResult:
    if len(targets) < 2:
        raise DataError("collide needs at least two targets")
    groups = resolve_targets(targets, ctx)

    summaries = []
    classes: Dict[str, List[TargetSummary]] = defaultdict(list)
    for name, group in zip(targets, groups):
        summary = TargetSummary(
            target=name,
            order=group.order,
            solvable=is_solvable(group),
            fingerprint=fingerprint(exponent_type(group)).hex(),
        )
        summaries.append(summary)
        classes[summary.fingerprint].append(summary)

    collisions = [
        CollisionClass(
            fingerprint=fp,
            members=[m.target for m in members],
            mixed_solvability=len({m.solvable for m in members}) > 1,
        )
        for fp, members in classes.items()
        if len(members) > 1
    ]
    for c in collisions:
        color = Colors.YELLOW if c.mixed_solvability else Colors.BLUE
        logger.info(paint(f"Collision: {', '.join(c.members)}", color))

    report = CollideReport(
        success=True,
        message=f"{len(collisions)} collision class(es) among {len(targets)} targets",
        targets=summaries,
        collisions=collisions,
    )
    lines = [table([
        {"target": s.target, "order": s.order, "solvable": yes_no(s.solvable),
         "exponent type": bytes.fromhex(s.fingerprint).decode("ascii")}
        for s in summaries
    ]), ""]
    for c in collisions:
        flag = " (solvability differs)" if c.mixed_solvability else ""
        lines.append(f"collision: {', '.join(c.members)}{flag}")
    lines.append(f"result: {report.message}")
    return CommandResult(report, "\n".join(lines))
