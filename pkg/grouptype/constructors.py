"""
Constructors for the classical groups used in the catalog, plus direct and
semidirect products and `.grp` file ingestion.
"""

import logging
import math
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import isprime, primitive_root

from .elements import ActionTable, Element, Permutation, ProductPair, QuaternionElement, SemidirectPair
from .engine import DEFAULT_CAP, FiniteGroup, GroupId, enumerate_closure
from .errors import (
    CapExceeded,
    CountOverflow,
    DegreeOutOfRange,
    DomainMismatch,
    InvariantViolation,
    NotAnAutomorphism,
    NotMultipleOfFour,
    NotPrime,
    OddOrder,
    TooSmall,
)
from .utils.grp_format import format_generator_file, read_generator_file

logger = logging.getLogger("GroupType.Constructors")

INT64_MAX = 2**63 - 1
MAX_PGL_PRIME = 31

GeneratorAction = Union[Callable[[Element], Element], Sequence[int], np.ndarray]


def _expect_order(group: FiniteGroup, expected: int) -> FiniteGroup:
    if group.order != expected:
        raise InvariantViolation(f"{group.label} has {group.order} elements, expected {expected}")
    return group


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise TooSmall(f"cyclic group order must be positive, got {n}")
    generator = Permutation.from_cycles([range(1, n + 1)] if n > 1 else [], n)
    return _expect_order(enumerate_closure([generator], label=f"C{n}"), n)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group with ``order`` elements; order 2 gives C2."""
    if order < 2:
        raise TooSmall(f"dihedral group order must be at least 2, got {order}")
    if order % 2:
        raise OddOrder(f"dihedral group order must be even, got {order}")
    if order == 2:
        return cyclic(2).relabel("D2")
    if order == 4:
        generators = [Permutation.from_cycles([(1, 2)], 4), Permutation.from_cycles([(3, 4)], 4)]
        return _expect_order(enumerate_closure(generators, label="D4"), 4)

    n = order // 2
    rotation = Permutation.from_cycles([range(1, n + 1)], n)
    # Reflection fixing point 1: k -> 2 - k (mod n).
    reflection = Permutation([(n - (k - 1)) % n + 1 for k in range(1, n + 1)])
    return _expect_order(enumerate_closure([rotation, reflection], label=f"D{order}"), order)


def generalized_quaternion(order: int) -> FiniteGroup:
    if order % 4:
        raise NotMultipleOfFour(f"quaternion group order must be a multiple of 4, got {order}")
    k = order // 4
    if k < 2:
        raise TooSmall(f"quaternion group order must be at least 8, got {order}")
    a = QuaternionElement(k, 1, 0)
    b = QuaternionElement(k, 0, 1)
    return _expect_order(enumerate_closure([a, b], label=f"Q{order}"), order)


def alternating(degree: int) -> FiniteGroup:
    if not 3 <= degree <= 8:
        raise DegreeOutOfRange(f"alternating group degree must lie in 3..8, got {degree}")
    generators = [Permutation.from_cycles([(k - 2, k - 1, k)], degree) for k in range(3, degree + 1)]
    return _expect_order(enumerate_closure(generators, label=f"A{degree}"), math.factorial(degree) // 2)


def _checked_order(a: int, b: int, cap: int) -> int:
    order = a * b
    if order > INT64_MAX:
        raise CountOverflow(None, f"group order {a}*{b} exceeds the signed 64-bit range")
    if order > cap:
        raise CapExceeded(cap)
    return order


def direct_product(
    left: FiniteGroup,
    right: FiniteGroup,
    cap: int = DEFAULT_CAP,
    label: Optional[str] = None,
) -> FiniteGroup:
    order = _checked_order(left.order, right.order, cap)
    id_left, id_right = left.identity, right.identity
    generators = [ProductPair(a, id_right) for a in left.generators]
    generators += [ProductPair(id_left, b) for b in right.generators]
    group = enumerate_closure(generators, cap=cap, label=label or f"{left.label}x{right.label}")
    return _expect_order(group, order)


def power_automorphism(normal: FiniteGroup, k: int) -> Callable[[Element], Element]:
    """x -> x^k. Only an automorphism when gcd(k, exponent) = 1; semidirect_product checks."""

    def apply(x: Element) -> Element:
        return x ** k

    apply.__name__ = f"power_{k}"
    return apply


def _action_array(normal: FiniteGroup, action: GeneratorAction, position: int) -> np.ndarray:
    if callable(action):
        images = []
        for x in normal.elements:
            image = action(x)
            idx = normal.index.get(image.encode())
            if idx is None:
                raise NotAnAutomorphism(f"image of generator {position} sends {x!r} outside N")
            images.append(idx)
        return np.asarray(images, dtype=np.int64)
    return np.asarray(action, dtype=np.int64)


def semidirect_product(
    normal: FiniteGroup,
    quotient: FiniteGroup,
    generator_action: Sequence[GeneratorAction],
    cap: int = DEFAULT_CAP,
    label: Optional[str] = None,
) -> FiniteGroup:
    """
    N ⋊ H for the action of H on N given on the generators of H.

    Each entry of ``generator_action`` is either a callable on elements of N or
    an index array over ``normal.elements``; entries line up with
    ``quotient.generators``.
    """
    if len(generator_action) != len(quotient.generators):
        raise ValueError(
            f"{len(generator_action)} action maps given for {len(quotient.generators)} generators of H"
        )
    order = _checked_order(normal.order, quotient.order, cap)
    arrays = [_action_array(normal, a, pos) for pos, a in enumerate(generator_action)]
    table = ActionTable.from_generators(normal.elements, normal.generators, quotient.generators, arrays)
    if len(table.images) != quotient.order:
        raise InvariantViolation(f"action table covers {len(table.images)} of {quotient.order} elements of H")

    id_n, id_h = normal.identity, quotient.identity
    generators = [SemidirectPair(n, id_h, table) for n in normal.generators]
    generators += [SemidirectPair(id_n, h, table) for h in quotient.generators]
    group = enumerate_closure(generators, cap=cap, label=label or f"{normal.label}:{quotient.label}")
    return _expect_order(group, order)


def _projective_permutation(p: int, image: Callable[[Optional[int]], Optional[int]]) -> Permutation:
    """Points 0..p-1 are 1..p, infinity (None) is p+1."""

    def point(x: Optional[int]) -> int:
        return p + 1 if x is None else x + 1

    return Permutation([point(image(x)) for x in list(range(p)) + [None]])


def pgl2(p: int) -> FiniteGroup:
    """PGL(2, p) acting on the projective line by Möbius maps."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if p > MAX_PGL_PRIME:
        raise DegreeOutOfRange(f"pgl2 supports primes up to {MAX_PGL_PRIME}, got {p}")

    c = int(primitive_root(p))
    translation = _projective_permutation(p, lambda x: None if x is None else (x + 1) % p)
    scaling = _projective_permutation(p, lambda x: None if x is None else (c * x) % p)
    inversion = _projective_permutation(
        p, lambda x: 0 if x is None else (None if x == 0 else pow(x, -1, p))
    )
    generators = [translation, inversion] if c == 1 else [translation, scaling, inversion]
    group = enumerate_closure(generators, label=f"PGL2({p})")
    return _expect_order(group, p * (p * p - 1))


def sharply_transitive_count(group: FiniteGroup, points: Sequence[int]) -> int:
    """Number of distinct images of the ordered tuple ``points`` under the group."""
    if not group.is_permutation_group:
        raise DomainMismatch(f"{group.label} is not a permutation group")
    index = np.asarray(points, dtype=np.intp) - 1
    images = {tuple(x.array[index].tolist()) for x in group.elements}
    return len(images)


def from_generator_file(
    path: Union[str, Path],
    cap: int = DEFAULT_CAP,
    label: Optional[str] = None,
) -> FiniteGroup:
    parsed = read_generator_file(path)
    generators: List[Permutation] = [Permutation.from_cycles(cycles, parsed.degree) for cycles in parsed.generators]
    if not generators:
        generators = [Permutation.identity_of(parsed.degree)]
    provenance = GroupId(*parsed.smallgroup) if parsed.smallgroup else None
    group = enumerate_closure(generators, cap=cap, label=label or Path(path).stem, provenance=provenance)
    logger.info(f"Loaded {group.label} from {path}: order {group.order}, degree {parsed.degree}")
    return group


def write_generator_file(
    group: FiniteGroup,
    path: Union[str, Path],
    group_id: Optional[GroupId] = None,
    comment: Optional[str] = None,
) -> Path:
    if not group.is_permutation_group:
        raise DomainMismatch(f"{group.label} is not a permutation group and cannot be written as .grp")
    group_id = group_id or group.provenance
    smallgroup: Optional[Tuple[int, int]] = (group_id.order, group_id.index) if group_id else None
    cycles = [g.cycles() for g in group.generators if not g.is_identity()] or [[]]
    text = format_generator_file(
        group.degree,
        cycles,
        smallgroup=smallgroup,
        comment=comment,
    )
    path = Path(path)
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {group.label} ({group.order} elements) to {path}")
    return path
