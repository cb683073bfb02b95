"""
Order types and exponent types of finite groups.

An order type counts the elements of each order; an exponent type counts the
solutions of x^n = 1. Both are stored on the divisors of the group exponent m
and extended to every positive n (the exponent type through n -> gcd(n, m),
the order type by zero).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from sympy import divisors as sympy_divisors
from sympy import mobius

from .engine import FiniteGroup
from .errors import CountOverflow, InvariantViolation, KindMismatch, NegativeCount, ParseError

logger = logging.getLogger("GroupType.Spectra")

INT64_MAX = 2**63 - 1


class SpectrumKind(str, Enum):
    ORDER = "order_type"
    EXPONENT = "exponent_type"

    @property
    def tag(self) -> str:
        return "O" if self is SpectrumKind.ORDER else "E"


@dataclass(frozen=True)
class DivisorSet:
    modulus: int
    divisors: Tuple[int, ...]

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self) -> int:
        return len(self.divisors)


def divisors(m: int) -> DivisorSet:
    if not 1 <= m <= INT64_MAX:
        raise ValueError(f"modulus must lie in 1..2^63-1, got {m}")
    return DivisorSet(m, tuple(int(d) for d in sympy_divisors(m)))


@dataclass(frozen=True)
class Spectrum:
    kind: SpectrumKind
    modulus: int
    counts: Dict[int, int]

    def __post_init__(self):
        expected = divisors(self.modulus).divisors
        if tuple(self.counts) != expected:
            raise InvariantViolation(
                f"{self.kind.value} keys {sorted(self.counts)} are not the divisors of {self.modulus}"
            )
        for n, c in self.counts.items():
            if c < 0:
                raise NegativeCount(f"{self.kind.value} count at {n} is negative ({c})")
            if c > INT64_MAX:
                raise CountOverflow(n)

    @classmethod
    def from_counts(cls, kind: SpectrumKind, modulus: int, counts: Dict[int, int]) -> "Spectrum":
        """Fill absent divisors with zero and order the keys."""
        ordered = {d: int(counts.get(d, 0)) for d in divisors(modulus)}
        extra = set(counts) - set(ordered)
        if any(counts[n] for n in extra):
            raise InvariantViolation(f"counts at {sorted(extra)} do not divide the modulus {modulus}")
        return cls(kind, modulus, ordered)

    @property
    def group_order(self) -> int:
        if self.kind is SpectrumKind.ORDER:
            return sum(self.counts.values())
        return self.counts[self.modulus]

    def value_at(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"spectra are defined on positive integers, got {n}")
        if self.kind is SpectrumKind.EXPONENT:
            return self.counts[math.gcd(n, self.modulus)]
        return self.counts.get(n, 0) if self.modulus % n == 0 else 0

    def check_invariants(self) -> None:
        if self.counts[1] != 1:
            raise InvariantViolation(f"{self.kind.value} must be 1 at n=1, got {self.counts[1]}")
        if self.kind is SpectrumKind.EXPONENT:
            for n in self.counts:
                for d in divisors(n):
                    if self.counts[d] > self.counts[n]:
                        raise InvariantViolation(f"exponent type not monotone: e({d}) > e({n})")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "modulus": self.modulus,
            "counts": {str(n): c for n, c in self.counts.items()},
        }


def order_type(group: FiniteGroup) -> Spectrum:
    orders, counts = np.unique(group.element_orders, return_counts=True)
    spectrum = Spectrum.from_counts(
        SpectrumKind.ORDER,
        group.exponent,
        {int(o): int(c) for o, c in zip(orders, counts)},
    )
    if spectrum.group_order != group.order:
        raise InvariantViolation(f"order type of {group.label} sums to {spectrum.group_order}, not {group.order}")
    return spectrum


def exponent_from_order(spectrum: Spectrum) -> Spectrum:
    """e(n) = sum of o(d) over d | n."""
    _require(spectrum, SpectrumKind.ORDER)
    counts = {n: sum(spectrum.counts[d] for d in divisors(n)) for n in spectrum.counts}
    return Spectrum(SpectrumKind.EXPONENT, spectrum.modulus, counts)


def exponent_type(group: FiniteGroup) -> Spectrum:
    spectrum = exponent_from_order(order_type(group))
    spectrum.check_invariants()
    return spectrum


def _require(spectrum: Spectrum, kind: SpectrumKind) -> None:
    if spectrum.kind is not kind:
        raise KindMismatch(f"expected {kind.value}, got {spectrum.kind.value}")


def e_at(spectrum: Spectrum, n: int) -> int:
    _require(spectrum, SpectrumKind.EXPONENT)
    return spectrum.value_at(n)


def order_from_exponent(spectrum: Spectrum) -> Spectrum:
    """Möbius inversion: o(n) = sum of mu(n/d) e(d) over d | n."""
    _require(spectrum, SpectrumKind.EXPONENT)
    counts = {}
    for n in spectrum.counts:
        value = sum(int(mobius(n // d)) * spectrum.counts[d] for d in divisors(n))
        if value < 0:
            raise NegativeCount(f"Möbius inversion gives {value} at n={n}; input is not an exponent type")
        counts[n] = value
    return Spectrum(SpectrumKind.ORDER, spectrum.modulus, counts)


def spectrum_product(factors: Sequence[Spectrum]) -> Spectrum:
    """Exponent type of a direct product, from the exponent types of its factors."""
    if not factors:
        raise ValueError("spectrum_product needs at least one factor")
    for f in factors:
        _require(f, SpectrumKind.EXPONENT)
    modulus = math.lcm(*(f.modulus for f in factors))
    counts = {}
    for n in divisors(modulus):
        value = 1
        for f in factors:
            value *= f.value_at(n)
            if value > INT64_MAX:
                logger.error(f"Count overflow at divisor {n}")
                raise CountOverflow(n)
        counts[n] = value
    return Spectrum(SpectrumKind.EXPONENT, modulus, counts)


def spectra_equal(a: Spectrum, b: Spectrum) -> bool:
    """Equality of the extended functions on every divisor of lcm(m_a, m_b)."""
    return first_difference(a, b) is None


def first_difference(a: Spectrum, b: Spectrum) -> Optional[int]:
    """Smallest divisor of the joint modulus where a and b disagree, or None."""
    if a.kind is not b.kind:
        raise KindMismatch(f"cannot compare {a.kind.value} with {b.kind.value}")
    for n in divisors(math.lcm(a.modulus, b.modulus)):
        if a.value_at(n) != b.value_at(n):
            return n
    return None


def minimal_modulus(spectrum: Spectrum) -> int:
    """Smallest modulus that describes the same extended function."""
    if spectrum.kind is SpectrumKind.ORDER:
        return math.lcm(1, *(n for n, c in spectrum.counts.items() if c))
    for d in divisors(spectrum.modulus):
        if all(c == spectrum.counts[math.gcd(n, d)] for n, c in spectrum.counts.items()):
            return d
    return spectrum.modulus


def reduce_modulus(spectrum: Spectrum) -> Spectrum:
    modulus = minimal_modulus(spectrum)
    if modulus == spectrum.modulus:
        return spectrum
    return Spectrum(spectrum.kind, modulus, {d: spectrum.counts[d] for d in divisors(modulus)})


def fingerprint(spectrum: Spectrum) -> bytes:
    """Serialized on the minimal modulus, so spectra_equal spectra share a fingerprint."""
    spectrum = reduce_modulus(spectrum)
    pairs = ",".join(f"{n}:{c}" for n, c in spectrum.counts.items())
    return f"{spectrum.kind.tag}|{spectrum.modulus}|{pairs}".encode("ascii")


def parse_fingerprint(data: bytes, source: str = "fingerprint") -> Spectrum:
    try:
        tag, modulus, pairs = data.decode("ascii").split("|")
        kind = {k.tag: k for k in SpectrumKind}[tag]
        counts = {}
        for pair in pairs.split(","):
            n, c = pair.split(":")
            counts[int(n)] = int(c)
        return Spectrum(kind, int(modulus), counts)
    except (UnicodeDecodeError, ValueError, KeyError) as e:
        raise ParseError(source, 0, f"malformed fingerprint {data!r}: {e}") from e
    except InvariantViolation as e:
        raise ParseError(source, 0, str(e)) from e


def frobenius_holds(spectrum: Spectrum, group_order: Optional[int] = None) -> bool:
    """n divides e(n) for every n dividing the group order."""
    _require(spectrum, SpectrumKind.EXPONENT)
    group_order = group_order or spectrum.group_order
    return all(e_at(spectrum, n) % n == 0 for n in divisors(group_order))
