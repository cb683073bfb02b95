import random
from pathlib import Path

import pytest

from grouptype.catalog import build_catalog
from grouptype.constructors import alternating, cyclic, dihedral, generalized_quaternion, pgl2

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def catalog():
    return build_catalog(DATA_DIR, max_workers=1)


@pytest.fixture(scope="session")
def catalog_groups(catalog):
    return {entry.label: group for entry, group in catalog}


@pytest.fixture(scope="session")
def small_pool():
    """Small groups from every constructor family, keyed by name."""
    pool = {f"C{n}": cyclic(n) for n in range(2, 13)}
    pool.update({
        "Q8": generalized_quaternion(8),
        "Q12": generalized_quaternion(12),
        "Q16": generalized_quaternion(16),
        "D6": dihedral(6),
        "D8": dihedral(8),
        "D10": dihedral(10),
        "A4": alternating(4),
        "PGL2(2)": pgl2(2),
        "PGL2(3)": pgl2(3),
    })
    return pool


@pytest.fixture
def rng():
    return random.Random(20240601)
