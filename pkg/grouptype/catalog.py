"""
The seven small groups S1..S7 and the split into the factors of G and H.

S1, S2, S3 and S6 come from generator files in the data directory; S4, S5 and
S7 are determined by their descriptions and are built in code. Every group is
checked against its expected order, its SmallGroups header and the exponent
type fingerprint recorded in ``fingerprints.json``.
"""

import json
import logging
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from .constructors import (
    cyclic,
    direct_product,
    from_generator_file,
    generalized_quaternion,
    pgl2,
    power_automorphism,
    semidirect_product,
)
from .engine import DEFAULT_CAP, FiniteGroup, GroupId
from .errors import CatalogDataMissing, CatalogMismatch, FingerprintMismatch, ParseError
from .spectra import exponent_type, fingerprint
from .utils.colors import Colors, paint, status
from .utils.concurrency import run_jobs

logger = logging.getLogger("GroupType.Catalog")

FINGERPRINT_FILE = "fingerprints.json"
LEFT_LABELS = ("S1", "S2", "S3")
RIGHT_LABELS = ("S4", "S5", "S6", "S7")


class SourceKind(str, Enum):
    BUILTIN = "builtin"
    FILE = "file"


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    group_id: GroupId
    description: str
    source: SourceKind
    location: str  # recipe name or file name inside the data directory
    expected_fingerprint: Optional[bytes] = None

    @property
    def expected_order(self) -> int:
        return self.group_id.order


def build_s4(cap: int = DEFAULT_CAP) -> FiniteGroup:
    """C7 ⋊ C3 with the generator of C3 acting by x -> x^2."""
    normal = cyclic(7)
    return semidirect_product(normal, cyclic(3), [power_automorphism(normal, 2)], cap=cap, label="C7:C3")


def build_s5(cap: int = DEFAULT_CAP) -> FiniteGroup:
    return direct_product(cyclic(12), generalized_quaternion(8), cap=cap, label="C12xQ8")


def build_s7(cap: int = DEFAULT_CAP) -> FiniteGroup:
    return pgl2(7)


RECIPES: Dict[str, Callable[[int], FiniteGroup]] = {
    "c7_c3": build_s4,
    "c12_q8": build_s5,
    "pgl2_7": build_s7,
}

TABLE: Tuple[CatalogEntry, ...] = (
    CatalogEntry("S1", GroupId(168, 43), "C2^3 ⋊ (C7 ⋊ C3)", SourceKind.FILE, "s1.grp"),
    CatalogEntry("S2", GroupId(1008, 289), "C7 ⋊ (C3 x (C3 ⋊ Q16))", SourceKind.FILE, "s2.grp"),
    CatalogEntry("S3", GroupId(1344, 6967), "C7 ⋊ (((C4 x D8) ⋊ C2) ⋊ C3)", SourceKind.FILE, "s3.grp"),
    CatalogEntry("S4", GroupId(21, 1), "C7 ⋊ C3", SourceKind.BUILTIN, "c7_c3"),
    CatalogEntry("S5", GroupId(96, 166), "C12 x Q8", SourceKind.BUILTIN, "c12_q8"),
    CatalogEntry("S6", GroupId(336, 136), "C7 ⋊ (C4 x A4)", SourceKind.FILE, "s6.grp"),
    CatalogEntry("S7", GroupId(336, 208), "PGL(2,7)", SourceKind.BUILTIN, "pgl2_7"),
)


def catalog_entry(label: str) -> CatalogEntry:
    for entry in TABLE:
        if entry.label.lower() == label.lower():
            return entry
    raise KeyError(label)


def load_fingerprints(data_dir: Union[str, Path]) -> Dict[str, bytes]:
    """Read ``fingerprints.json``: label -> hex fingerprint."""
    path = Path(data_dir) / FINGERPRINT_FILE
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except FileNotFoundError as e:
        logger.error(f"Fingerprint file {path} not found")
        raise CatalogDataMissing(f"fingerprint file {path} not found") from e
    except json.JSONDecodeError as e:
        logger.error(f"Error parsing JSON in {path}")
        raise ParseError(str(path), e.lineno, e.msg) from e

    if not isinstance(raw, dict):
        raise ParseError(str(path), 1, "expected an object mapping labels to hex strings")
    fingerprints = {}
    for label, value in raw.items():
        try:
            fingerprints[label] = bytes.fromhex(value)
        except (TypeError, ValueError) as e:
            raise ParseError(str(path), 0, f"fingerprint for {label} is not a hex string") from e
    return fingerprints


def build_entry(entry: CatalogEntry, data_dir: Union[str, Path], cap: int = DEFAULT_CAP) -> FiniteGroup:
    if entry.source is SourceKind.FILE:
        path = Path(data_dir) / entry.location
        if not path.exists():
            raise CatalogDataMissing(f"{entry.label}: generator file {path} not found")
        group = from_generator_file(path, cap=cap, label=entry.label)
    else:
        group = RECIPES[entry.location](cap).relabel(entry.label, entry.group_id)
    # Element orders are the expensive part of every later spectrum.
    group.element_orders
    return group


def _validate(entry: CatalogEntry, group: FiniteGroup, verify_fingerprints: bool) -> None:
    problems = []
    if group.order != entry.expected_order:
        problems.append(CatalogMismatch(f"{entry.label} has order {group.order}, expected {entry.expected_order}"))
    if entry.source is SourceKind.FILE and group.provenance != entry.group_id:
        problems.append(
            CatalogMismatch(f"{entry.label}: file header {group.provenance} does not match Id {entry.group_id}")
        )
    actual = fingerprint(exponent_type(group))
    if entry.expected_fingerprint is not None and actual != entry.expected_fingerprint:
        problems.append(FingerprintMismatch(entry.label, entry.expected_fingerprint, actual))

    logger.info(f"{entry.label} {entry.group_id}: order {group.order}, fingerprint {status(not problems)}")
    if not problems:
        return
    for problem in problems:
        logger.error(paint(str(problem), Colors.RED))
    if verify_fingerprints:
        raise problems[0]
    logger.warning(paint(f"{entry.label}: continuing despite mismatch (fingerprint checks disabled)", Colors.YELLOW))


def build_catalog(
    data_dir: Union[str, Path],
    verify_fingerprints: bool = True,
    cap: int = DEFAULT_CAP,
    max_workers: int = 4,
    labels: Optional[Sequence[str]] = None,
) -> List[Tuple[CatalogEntry, FiniteGroup]]:
    """Build and validate the catalog groups (all seven unless ``labels`` narrows it)."""
    data_dir = Path(data_dir)
    entries = [e for e in TABLE if labels is None or e.label in labels]

    try:
        fingerprints = load_fingerprints(data_dir)
    except CatalogDataMissing:
        if verify_fingerprints:
            raise
        fingerprints = {}
    if verify_fingerprints:
        missing = [e.label for e in entries if e.label not in fingerprints]
        if missing:
            raise CatalogDataMissing(f"no fingerprint recorded for {', '.join(missing)}")
    entries = [replace(e, expected_fingerprint=fingerprints.get(e.label)) for e in entries]

    logger.info(f"Building {len(entries)} catalog groups from {data_dir}")
    groups = run_jobs([lambda e=e: build_entry(e, data_dir, cap) for e in entries], max_workers)

    for entry, group in zip(entries, groups):
        _validate(entry, group, verify_fingerprints)
    return list(zip(entries, groups))


def factor_lists(
    catalog: Sequence[Tuple[CatalogEntry, FiniteGroup]],
) -> Tuple[List[FiniteGroup], List[FiniteGroup]]:
    """([S1, S2, S3], [S4, S5, S6, S7]): the factors of G and of H."""
    by_label = {entry.label: group for entry, group in catalog}
    missing = [label for label in LEFT_LABELS + RIGHT_LABELS if label not in by_label]
    if missing:
        raise CatalogDataMissing(f"catalog lacks {', '.join(missing)}")
    return [by_label[label] for label in LEFT_LABELS], [by_label[label] for label in RIGHT_LABELS]
