"""
`grouptype catalog`: list the seven catalog groups with their checks.
"""

import logging
from typing import List, Optional

from pydantic import BaseModel

from ..catalog import build_catalog
from ..engine import is_solvable
from ..spectra import exponent_type, fingerprint
from .common import CommandContext, CommandResult, table, yes_no

logger = logging.getLogger("CatalogCommand")


class CatalogRow(BaseModel):
    label: str
    group_id: str
    description: str
    source: str
    order: int
    expected_order: int
    exponent: int
    solvable: bool
    fingerprint: str
    fingerprint_ok: Optional[bool] = None


class CatalogReport(BaseModel):
    success: bool
    message: str
    entries: List[CatalogRow]


def cmd_catalog(ctx: CommandContext) -> CommandResult:
    """Exit 0 when every entry matches its recorded order and fingerprint, 2 otherwise."""
    catalog = build_catalog(ctx.data_dir, verify_fingerprints=False, cap=ctx.cap, max_workers=ctx.max_workers)
    rows = []
    for entry, group in catalog:
        actual = fingerprint(exponent_type(group))
        rows.append(CatalogRow(
            label=entry.label,
            group_id=str(entry.group_id),
            description=entry.description,
            source=f"{entry.source.value}:{entry.location}",
            order=group.order,
            expected_order=entry.expected_order,
            exponent=group.exponent,
            solvable=is_solvable(group),
            fingerprint=actual.hex(),
            fingerprint_ok=None if entry.expected_fingerprint is None else actual == entry.expected_fingerprint,
        ))

    ok = all(r.fingerprint_ok and r.order == r.expected_order for r in rows)
    report = CatalogReport(
        success=ok,
        message="all entries match" if ok else "some entries do not match their recorded data",
        entries=rows,
    )
    text = table([
        {"label": r.label, "id": r.group_id, "description": r.description, "source": r.source,
         "order": r.order, "exponent": r.exponent, "solvable": yes_no(r.solvable),
         "fingerprint": "n/a" if r.fingerprint_ok is None else yes_no(r.fingerprint_ok)}
        for r in rows
    ])
    return CommandResult(report, text + f"\n\nresult: {report.message}", 0 if ok else 2)
