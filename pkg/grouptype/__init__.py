"""
grouptype: order types and exponent types of small finite groups, with a
native reproduction of a pair of groups of order 227598336 that share an
order type while only one of them is solvable.
"""

import os

__version__ = os.getenv("GROUPTYPE_VERSION", "1.0.0")

from .constructors import (  # noqa: E402
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_generator_file,
    generalized_quaternion,
    pgl2,
    semidirect_product,
)
from .engine import FiniteGroup, GroupId, derived_series, derived_subgroup, is_perfect, is_solvable  # noqa: E402
from .spectra import Spectrum, exponent_type, order_type, spectra_equal, spectrum_product  # noqa: E402

__all__ = [
    "FiniteGroup",
    "GroupId",
    "Spectrum",
    "alternating",
    "cyclic",
    "derived_series",
    "derived_subgroup",
    "dihedral",
    "direct_product",
    "exponent_type",
    "from_generator_file",
    "generalized_quaternion",
    "is_perfect",
    "is_solvable",
    "order_type",
    "pgl2",
    "semidirect_product",
    "spectra_equal",
    "spectrum_product",
]
