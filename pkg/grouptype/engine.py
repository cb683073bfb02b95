"""
Group engine: breadth-first enumeration of finite groups from generators and
the structural data built on top of it (exponent, generated subgroups, derived
series, solvability, perfectness).
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .elements import Element, Permutation, commutator
from .errors import CapExceeded, ElementNotInGroup, InvariantViolation

logger = logging.getLogger("GroupType.Engine")

DEFAULT_CAP = 10_000_000


@dataclass(frozen=True, order=True)
class GroupId:
    """Coordinates (n, i) of a group in the SmallGroups library; provenance only."""

    order: int
    index: int

    def __str__(self) -> str:
        return f"({self.order}, {self.index})"


class FiniteGroup:
    """
    A finite group given by generators together with its full element list.

    ``elements`` is in breadth-first discovery order (identity first, generators
    applied in declaration order), so indices are reproducible across runs.
    """

    def __init__(
        self,
        label: str,
        generators: Sequence[Element],
        elements: Sequence[Element],
        provenance: Optional[GroupId] = None,
    ):
        if not generators:
            raise ValueError("a group needs at least one generator")
        self.label = label
        self.generators: Tuple[Element, ...] = tuple(generators)
        self.elements: Tuple[Element, ...] = tuple(elements)
        self.index: Dict[bytes, int] = {x.encode(): i for i, x in enumerate(self.elements)}
        self.provenance = provenance

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Element:
        return self.generators[0].identity()

    @property
    def is_permutation_group(self) -> bool:
        return isinstance(self.identity, Permutation)

    @property
    def degree(self) -> Optional[int]:
        identity = self.identity
        return identity.degree if isinstance(identity, Permutation) else None

    def __contains__(self, x: Element) -> bool:
        return x.encode() in self.index

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.fromiter((x.order() for x in self.elements), dtype=np.int64, count=self.order)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(int(o) for o in np.unique(self.element_orders)))

    def relabel(self, label: str, provenance: Optional[GroupId] = None) -> "FiniteGroup":
        return FiniteGroup(label, self.generators, self.elements, provenance or self.provenance)


def enumerate_closure(
    generators: Sequence[Element],
    cap: int = DEFAULT_CAP,
    label: str = "G",
    provenance: Optional[GroupId] = None,
) -> FiniteGroup:
    """Close {identity} under right multiplication by the generators."""
    generators = list(generators)
    if not generators:
        raise ValueError("enumerate_closure needs at least one generator")
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    # Raises DomainMismatch when the generators do not share a domain.
    for g in generators[1:]:
        generators[0].compose(g)

    identity = generators[0].identity()
    elements = [identity]
    seen = {identity.encode()}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = x.compose(g)
            key = y.encode()
            if key in seen:
                continue
            if len(elements) >= cap:
                logger.error(f"Closure of {label} exceeded cap {cap}")
                raise CapExceeded(cap)
            seen.add(key)
            elements.append(y)
            queue.append(y)

    logger.debug(f"Enumerated {label}: {len(elements)} elements from {len(generators)} generators")
    return FiniteGroup(label, generators, elements, provenance)


def exponent(group: FiniteGroup) -> int:
    return group.exponent


@dataclass(frozen=True, eq=False)
class Subgroup:
    """Subset of a parent group closed under composition and inverse."""

    parent: FiniteGroup
    elements: Tuple[Element, ...]
    generators: Tuple[Element, ...] = field(default=())

    def __post_init__(self):
        if self.parent.order % len(self.elements) != 0:
            raise InvariantViolation(
                f"subgroup of size {len(self.elements)} cannot sit inside {self.parent.label} "
                f"of order {self.parent.order}"
            )

    @cached_property
    def members(self) -> frozenset:
        return frozenset(x.encode() for x in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, x: Element) -> bool:
        return x.encode() in self.members

    def as_group(self, label: Optional[str] = None) -> FiniteGroup:
        generators = self.generators or (self.parent.identity,)
        return FiniteGroup(label or f"{self.parent.label}-sub{self.order}", generators, self.elements)


GroupLike = Union[FiniteGroup, Subgroup]


def _as_group(target: GroupLike) -> FiniteGroup:
    return target.as_group() if isinstance(target, Subgroup) else target


def subgroup_generated(group: FiniteGroup, seed: Iterable[Element]) -> Subgroup:
    """
    Smallest subgroup of ``group`` containing ``seed``.

    Seeds already inside the growing subgroup are skipped, so the recorded
    generating set stays small (each accepted seed at least doubles the size).
    """
    identity = group.identity
    elements: List[Element] = [identity]
    members = {identity.encode()}
    generators: List[Element] = []

    for s in seed:
        key = s.encode()
        if key not in group.index:
            raise ElementNotInGroup(f"{s!r} is not an element of {group.label}")
        if key in members:
            continue
        generators.append(s)
        queue = deque(elements)
        while queue:
            x = queue.popleft()
            for g in generators:
                y = x.compose(g)
                y_key = y.encode()
                if y_key not in members:
                    members.add(y_key)
                    elements.append(y)
                    queue.append(y)

    return Subgroup(group, tuple(elements), tuple(generators))


def _permutation_commutators(elements: Sequence[Permutation]) -> List[Permutation]:
    """All distinct x^-1 y^-1 x y, one vectorised row block per x."""
    table = np.stack([p.array for p in elements]).astype(np.intp)
    inverses = np.argsort(table, axis=1)
    found: Dict[bytes, Permutation] = {}
    for i in range(table.shape[0]):
        # k -> x^-1 -> y^-1 -> x -> y
        step = inverses[:, inverses[i]]
        step = table[i][step]
        rows = np.ascontiguousarray(np.take_along_axis(table, step, axis=1))
        # rows as void scalars, so unique() compares them as raw bytes
        keys = rows.view(np.dtype((np.void, rows.dtype.itemsize * rows.shape[1]))).ravel()
        _, first = np.unique(keys, return_index=True)
        for row in rows[first]:
            perm = Permutation.from_array(row)
            found.setdefault(perm.encode(), perm)
    return list(found.values())


def _generic_commutators(elements: Sequence[Element]) -> List[Element]:
    found: Dict[bytes, Element] = {}
    for x in elements:
        for y in elements:
            c = commutator(x, y)
            found.setdefault(c.encode(), c)
    return list(found.values())


def is_normal(group: GroupLike, sub: Subgroup) -> bool:
    """True when ``sub`` is invariant under conjugation by every generator of ``group``."""
    group = _as_group(group)
    for g in group.generators:
        g_inv = g.inverse()
        for x in sub.elements:
            if g_inv.compose(x).compose(g).encode() not in sub.members:
                return False
    return True


def derived_subgroup(target: GroupLike) -> Subgroup:
    group = _as_group(target)
    if group.is_permutation_group:
        commutators = _permutation_commutators(group.elements)
    else:
        commutators = _generic_commutators(group.elements)
    derived = subgroup_generated(group, commutators)
    if not is_normal(group, derived):
        raise InvariantViolation(f"derived subgroup of {group.label} is not normal")
    logger.debug(f"Derived subgroup of {group.label}: order {derived.order} from {len(commutators)} commutators")
    return derived


def derived_series(group: FiniteGroup) -> List[Subgroup]:
    """G, G', G'', ... until the trivial group or a repeated (perfect) term."""
    whole = Subgroup(group, group.elements, group.generators)
    series = [whole]
    current = whole
    while current.order > 1:
        step = derived_subgroup(current)
        term = Subgroup(group, step.elements, step.generators)
        series.append(term)
        if term.order == current.order:
            break
        current = term
    return series


def is_solvable(group: FiniteGroup) -> bool:
    return derived_series(group)[-1].order == 1


def is_perfect(target: GroupLike) -> bool:
    """The trivial group counts as perfect."""
    size = target.order
    return derived_subgroup(target).order == size
