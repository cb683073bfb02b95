"""
`grouptype compare --left T... --right T...`: compare the exponent types of two
direct products given by their factors.
"""

import logging
import math
from typing import List, Optional, Sequence

from pydantic import BaseModel

from ..engine import is_solvable
from ..spectra import divisors, exponent_type, spectrum_product
from ..utils.colors import status
from .common import CommandContext, CommandResult, table, yes_no
from .targets import resolve_targets

logger = logging.getLogger("CompareCommand")


class CompareRow(BaseModel):
    n: int
    left: int
    right: int
    equal: bool


class CompareReport(BaseModel):
    success: bool
    message: str
    left_targets: List[str]
    right_targets: List[str]
    left_order: int
    right_order: int
    modulus: int
    per_divisor: List[CompareRow]
    equal: bool
    first_difference: Optional[int] = None
    left_solvable: bool
    right_solvable: bool


def cmd_compare(left: Sequence[str], right: Sequence[str], ctx: CommandContext) -> CommandResult:
    """Exit 0 when the products have equal exponent types, 1 otherwise."""
    groups = resolve_targets(list(left) + list(right), ctx)
    left_groups, right_groups = groups[: len(left)], groups[len(left):]

    left_product = spectrum_product([exponent_type(g) for g in left_groups])
    right_product = spectrum_product([exponent_type(g) for g in right_groups])
    modulus = math.lcm(left_product.modulus, right_product.modulus)

    rows = [
        CompareRow(n=n, left=left_product.value_at(n), right=right_product.value_at(n),
                   equal=left_product.value_at(n) == right_product.value_at(n))
        for n in divisors(modulus)
    ]
    first = next((r.n for r in rows if not r.equal), None)
    equal = first is None
    report = CompareReport(
        success=equal,
        message="exponent types agree" if equal else f"exponent types differ at divisor {first}",
        left_targets=list(left),
        right_targets=list(right),
        left_order=left_product.group_order,
        right_order=right_product.group_order,
        modulus=modulus,
        per_divisor=rows,
        equal=equal,
        first_difference=first,
        left_solvable=all(is_solvable(g) for g in left_groups),
        right_solvable=all(is_solvable(g) for g in right_groups),
    )
    logger.info(f"{' x '.join(left)} vs {' x '.join(right)}: {status(equal, 'equal', 'different')}")

    text = "\n".join([
        f"left  = {' x '.join(left)} (order {report.left_order})",
        f"right = {' x '.join(right)} (order {report.right_order})",
        "",
        table([{"n": r.n, "e_left(n)": r.left, "e_right(n)": r.right, "equal": yes_no(r.equal)} for r in rows]),
        "",
        f"left solvable: {yes_no(report.left_solvable)}, right solvable: {yes_no(report.right_solvable)}",
        f"result: {report.message}",
    ])
    return CommandResult(report, text, 0 if equal else 1)
