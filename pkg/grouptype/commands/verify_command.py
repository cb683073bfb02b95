"""
`grouptype verify`: G = S1 x S2 x S3 and H = S4 x S5 x S6 x S7 have the same
order type, G is solvable and H is not.
"""

import logging
import math
from typing import List, Optional

from pydantic import BaseModel

from ..catalog import build_catalog, factor_lists
from ..engine import FiniteGroup, derived_series
from ..spectra import (
    divisors,
    exponent_type,
    fingerprint,
    frobenius_holds,
    order_from_exponent,
    spectra_equal,
    spectrum_product,
)
from ..utils.colors import Colors, paint, status
from .common import CommandContext, CommandResult, table, yes_no

logger = logging.getLogger("VerifyCommand")


class DivisorRow(BaseModel):
    n: int
    left_product: int
    right_product: int
    equal: bool


class FactorSummary(BaseModel):
    label: str
    order: int
    exponent: int
    solvable: bool
    derived_series: List[int]
    frobenius_ok: bool
    fingerprint: str


class VerificationReport(BaseModel):
    success: bool
    message: str
    divisors: List[int]
    per_divisor: List[DivisorRow]
    left_factors: List[FactorSummary]
    right_factors: List[FactorSummary]
    left_order: int
    right_order: int
    left_exponent: int
    right_exponent: int
    left_solvable: bool
    right_solvable: bool
    order_types_equal: bool
    first_failing_divisor: Optional[int] = None
    conclusion: bool


def summarize_factor(group: FiniteGroup) -> FactorSummary:
    spectrum = exponent_type(group)
    series = derived_series(group)
    return FactorSummary(
        label=group.label,
        order=group.order,
        exponent=group.exponent,
        solvable=series[-1].order == 1,
        derived_series=[term.order for term in series],
        frobenius_ok=frobenius_holds(spectrum, group.order),
        fingerprint=fingerprint(spectrum).hex(),
    )


def verify_factors(left: List[FiniteGroup], right: List[FiniteGroup]) -> VerificationReport:
    left_spectra = [exponent_type(g) for g in left]
    right_spectra = [exponent_type(g) for g in right]
    left_product = spectrum_product(left_spectra)
    right_product = spectrum_product(right_spectra)

    modulus = math.lcm(left_product.modulus, right_product.modulus)
    rows = []
    for n in divisors(modulus):
        lp, rp = left_product.value_at(n), right_product.value_at(n)
        rows.append(DivisorRow(n=n, left_product=lp, right_product=rp, equal=lp == rp))
        logger.debug(f"n={n}: {lp} vs {rp} {status(lp == rp)}")
    first_failure = next((row.n for row in rows if not row.equal), None)

    left_summaries = [summarize_factor(g) for g in left]
    right_summaries = [summarize_factor(g) for g in right]
    left_order = math.prod(g.order for g in left)
    right_order = math.prod(g.order for g in right)
    left_exponent = math.lcm(*(g.exponent for g in left))
    right_exponent = math.lcm(*(g.exponent for g in right))
    left_solvable = all(s.solvable for s in left_summaries)
    right_solvable = all(s.solvable for s in right_summaries)
    order_types_equal = spectra_equal(order_from_exponent(left_product), order_from_exponent(right_product))

    conclusion = (
        first_failure is None
        and left_order == right_order
        and left_exponent == right_exponent
    )
    success = conclusion and order_types_equal and left_solvable and not right_solvable
    if success:
        message = "order types agree; G is solvable and H is not"
    elif first_failure is not None:
        message = f"exponent types differ at divisor {first_failure}"
    elif not conclusion:
        message = "orders or exponents of G and H differ"
    elif not left_solvable:
        message = "G is not solvable"
    elif right_solvable:
        message = "H is solvable"
    else:
        message = "order types differ"

    return VerificationReport(
        success=success,
        message=message,
        divisors=[row.n for row in rows],
        per_divisor=rows,
        left_factors=left_summaries,
        right_factors=right_summaries,
        left_order=left_order,
        right_order=right_order,
        left_exponent=left_exponent,
        right_exponent=right_exponent,
        left_solvable=left_solvable,
        right_solvable=right_solvable,
        order_types_equal=order_types_equal,
        first_failing_divisor=first_failure,
        conclusion=conclusion,
    )


def render_verification(report: VerificationReport) -> str:
    lines = ["Exponent types of G = S1 x S2 x S3 and H = S4 x S5 x S6 x S7", ""]
    lines.append(table(
        [
            {"n": r.n, "e_G(n)": r.left_product, "e_H(n)": r.right_product, "equal": yes_no(r.equal)}
            for r in report.per_divisor
        ]
    ))
    lines.append("")
    factor_rows = [
        {
            "side": side,
            "factor": f.label,
            "order": f.order,
            "exponent": f.exponent,
            "solvable": yes_no(f.solvable),
            "derived series": "-".join(str(s) for s in f.derived_series),
            "frobenius": yes_no(f.frobenius_ok),
        }
        for side, factors in (("G", report.left_factors), ("H", report.right_factors))
        for f in factors
    ]
    lines.append(table(factor_rows))
    lines.append("")
    lines.append(f"|G| = {report.left_order}, |H| = {report.right_order}")
    lines.append(f"exp(G) = {report.left_exponent}, exp(H) = {report.right_exponent}")
    lines.append(f"order types equal: {yes_no(report.order_types_equal)}")
    lines.append(f"G solvable: {yes_no(report.left_solvable)}, H solvable: {yes_no(report.right_solvable)}")
    if report.first_failing_divisor is not None:
        lines.append(f"first failing divisor: {report.first_failing_divisor}")
    lines.append(f"result: {report.message}")
    return "\n".join(lines)


def cmd_verify(ctx: CommandContext, verify_fingerprints: bool = True) -> CommandResult:
    """Exit 0 when every claim holds, 1 when a mathematical check fails."""
    catalog = build_catalog(
        ctx.data_dir,
        verify_fingerprints=verify_fingerprints,
        cap=ctx.cap,
        max_workers=ctx.max_workers,
    )
    left, right = factor_lists(catalog)
    report = verify_factors(left, right)
    if report.success:
        logger.info(paint(f"Verification passed: {report.message}", Colors.GREEN))
    else:
        logger.error(paint(f"Verification failed: {report.message}", Colors.RED))
    return CommandResult(report, render_verification(report), 0 if report.success else 1)
