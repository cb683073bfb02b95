#!/usr/bin/env python3
"""
Example script showing the grouptype library API without the CLI.

Builds two small groups with the same order type (C4 x C4 and C2 x Q8),
prints their spectra and checks the identity behind the catalog search:
exponent types of direct products multiply divisor by divisor.
"""

import logging
import sys

from grouptype.constructors import cyclic, direct_product, generalized_quaternion
from grouptype.engine import derived_series, is_solvable
from grouptype.spectra import exponent_type, fingerprint, order_type, spectra_equal, spectrum_product
from grouptype.utils.colors import Colors, paint, status

logging.basicConfig(level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
logger = logging.getLogger("GroupType.Example")


def main() -> int:
    try:
        c4, c2, q8 = cyclic(4), cyclic(2), generalized_quaternion(8)
        left = direct_product(c4, c4, label="C4xC4")
        right = direct_product(c2, q8, label="C2xQ8")

        for group in (left, right):
            counts = {n: c for n, c in order_type(group).counts.items() if c}
            print(f"{group.label}: order {group.order}, order type {counts}")
            print(f"  derived series: {[term.order for term in derived_series(group)]}")
            print(f"  fingerprint: {fingerprint(exponent_type(group)).decode('ascii')}")

        same = spectra_equal(order_type(left), order_type(right))
        print(f"\nSame order type: {status(same)}")

        # e_{AxB}(n) = e_A(n) * e_B(n)
        product = spectrum_product([exponent_type(c4), exponent_type(c4)])
        multiplicative = spectra_equal(product, exponent_type(left))
        print(f"Exponent type of C4 x C4 from its factors: {status(multiplicative)}")

        print(f"Both solvable: {status(is_solvable(left) and is_solvable(right))}")
        print(paint("\nExample completed successfully", Colors.GREEN))
        return 0 if same and multiplicative else 1

    except Exception as e:
        logger.error(f"Error running example: {e}")
        raise


if __name__ == "__main__":
    sys.exit(main())
