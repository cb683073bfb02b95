"""
`grouptype spectrum TARGET`: order, exponent, spectra and solvability of one group.
"""

import logging
from typing import Dict, Optional

from pydantic import BaseModel

from ..engine import FiniteGroup, is_solvable
from ..spectra import exponent_type, fingerprint, order_type
from .common import CommandContext, CommandResult, counts_dict, table, yes_no
from .targets import resolve_target

logger = logging.getLogger("SpectrumCommand")


class SpectrumReport(BaseModel):
    success: bool
    message: str
    target: str
    order: int
    exponent: int
    degree: Optional[int] = None
    group_id: Optional[str] = None
    solvable: bool
    order_type: Dict[str, int]
    exponent_type: Dict[str, int]
    fingerprint: str


def spectrum_report(target: str, group: FiniteGroup) -> SpectrumReport:
    o = order_type(group)
    e = exponent_type(group)
    return SpectrumReport(
        success=True,
        message=f"spectrum of {target}",
        target=target,
        order=group.order,
        exponent=group.exponent,
        degree=group.degree,
        group_id=str(group.provenance) if group.provenance else None,
        solvable=is_solvable(group),
        order_type=counts_dict(o.counts),
        exponent_type=counts_dict(e.counts),
        fingerprint=fingerprint(e).hex(),
    )


def render_spectrum(report: SpectrumReport) -> str:
    lines = [f"{report.target}: order {report.order}, exponent {report.exponent}"]
    if report.group_id:
        lines.append(f"SmallGroups Id (header): {report.group_id}")
    lines.append(f"solvable: {yes_no(report.solvable)}")
    lines.append("")
    lines.append(table(
        [
            {"n": int(n), "o(n)": report.order_type[n], "e(n)": report.exponent_type[n]}
            for n in report.order_type
        ]
    ))
    lines.append("")
    lines.append(f"fingerprint: {bytes.fromhex(report.fingerprint).decode('ascii')}")
    return "\n".join(lines)


def cmd_spectrum(target: str, ctx: CommandContext) -> CommandResult:
    group = resolve_target(target, ctx)
    report = spectrum_report(target, group)
    logger.info(f"{target}: order {report.order}, exponent {report.exponent}")
    return CommandResult(report, render_spectrum(report))
