"""
Group-element domains and their composition laws.

Products are read left to right: ``a.compose(b)`` applies ``a`` first and then
``b``. This matches the right-action convention used by most permutation-group
software, so ``(1 2 3)·(1 2)`` fixes 1 and swaps 2 and 3, and results can be checked
against any of them.

Elements are immutable once built and can be shared between threads.
"""

import logging
import math
import struct
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DomainMismatch, ElementNotInGroup, InconsistentAction, NotAnAutomorphism

logger = logging.getLogger("GroupType.Elements")

# Permutation images are stored 0-based; uint16 keeps encodings compact and fixed-width.
PERM_DTYPE = np.dtype("<u2")
MAX_DEGREE = np.iinfo(PERM_DTYPE).max


def _length_prefixed(payload: bytes) -> bytes:
    return struct.pack("<I", len(payload)) + payload


class Element(ABC):
    """A value in one of the closed set of element domains."""

    __slots__ = ()

    @abstractmethod
    def compose(self, other: "Element") -> "Element":
        ...

    @abstractmethod
    def inverse(self) -> "Element":
        ...

    @abstractmethod
    def identity(self) -> "Element":
        """Identity of this element's domain."""

    @abstractmethod
    def encode(self) -> bytes:
        """Canonical byte encoding, injective within a domain."""

    def order(self) -> int:
        identity_key = self.identity().encode()
        power = self
        t = 1
        while power.encode() != identity_key:
            power = power.compose(self)
            t += 1
        return t

    def is_identity(self) -> bool:
        return self.encode() == self.identity().encode()

    def __mul__(self, other: "Element") -> "Element":
        return self.compose(other)

    def __pow__(self, n: int) -> "Element":
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = self.identity()
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1
        return result


class Permutation(Element):
    """
    Bijection of {1, ..., degree}.

    ``images[k-1]`` is the image of point k. Internally the images are kept as a
    read-only 0-based numpy array so that composition is a single fancy-index.
    """

    __slots__ = ("_array", "_key")

    def __init__(self, images: Sequence[int]):
        values = [int(v) for v in images]
        degree = len(values)
        if degree < 1:
            raise ValueError("a permutation needs degree >= 1")
        if degree > MAX_DEGREE:
            raise ValueError(f"degree {degree} exceeds the supported maximum {MAX_DEGREE}")
        if sorted(values) != list(range(1, degree + 1)):
            raise ValueError(f"images {values} are not a bijection of 1..{degree}")
        self._set(np.asarray(values, dtype=np.int64) - 1)

    def _set(self, array: np.ndarray) -> None:
        array = np.ascontiguousarray(array, dtype=PERM_DTYPE)
        array.flags.writeable = False
        self._array = array
        self._key = b"P" + struct.pack("<H", array.shape[0]) + array.tobytes()

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Permutation":
        """Wrap a trusted 0-based image array without re-validating it."""
        perm = cls.__new__(cls)
        perm._set(array)
        return perm

    @classmethod
    def identity_of(cls, degree: int) -> "Permutation":
        return cls.from_array(np.arange(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        array = np.arange(degree)
        seen = set()
        for cycle in cycles:
            points = [int(p) for p in cycle]
            for p in points:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} outside 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} repeated")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                array[a - 1] = b - 1
        return cls.from_array(array)

    @property
    def degree(self) -> int:
        return int(self._array.shape[0])

    @property
    def array(self) -> np.ndarray:
        return self._array

    @property
    def images(self) -> Tuple[int, ...]:
        return tuple(int(v) + 1 for v in self._array)

    def __call__(self, point: int) -> int:
        return int(self._array[point - 1]) + 1

    def _check(self, other: Element) -> "Permutation":
        if not isinstance(other, Permutation):
            raise DomainMismatch(f"cannot combine Permutation with {type(other).__name__}")
        if other.degree != self.degree:
            raise DomainMismatch(f"degree mismatch: {self.degree} vs {other.degree}")
        return other

    def compose(self, other: Element) -> "Permutation":
        other = self._check(other)
        return Permutation.from_array(other._array[self._array])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._array)
        inv[self._array] = np.arange(self.degree, dtype=PERM_DTYPE)
        return Permutation.from_array(inv)

    def identity(self) -> "Permutation":
        return Permutation.identity_of(self.degree)

    def encode(self) -> bytes:
        return self._key

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, 1-based, each starting at its smallest point."""
        images = self._array.tolist()
        visited = [False] * len(images)
        result = []
        for start in range(len(images)):
            if visited[start]:
                continue
            cycle = []
            point = start
            while not visited[point]:
                visited[point] = True
                cycle.append(point + 1)
                point = images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return f"Permutation(() on {self.degree})"
        text = "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)
        return f"Permutation({text} on {self.degree})"


@dataclass(frozen=True)
class QuaternionElement(Element):
    """
    a^i b^j in Q_{4k} = <a, b | a^{2k} = 1, b^2 = a^k, b a b^{-1} = a^{-1}>.
    """

    k: int
    i: int
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"quaternion parameter k must be positive, got {self.k}")
        if not 0 <= self.i < 2 * self.k or self.j not in (0, 1):
            raise ValueError(f"({self.i}, {self.j}) is not in normal form for k={self.k}")

    def _check(self, other: Element) -> "QuaternionElement":
        if not isinstance(other, QuaternionElement):
            raise DomainMismatch(f"cannot combine QuaternionElement with {type(other).__name__}")
        if other.k != self.k:
            raise DomainMismatch(f"quaternion parameter mismatch: {self.k} vs {other.k}")
        return other

    def compose(self, other: Element) -> "QuaternionElement":
        other = self._check(other)
        n = 2 * self.k
        sign = -1 if self.j else 1
        i = (self.i + sign * other.i + self.k * self.j * other.j) % n
        return QuaternionElement(self.k, i, self.j ^ other.j)

    def inverse(self) -> "QuaternionElement":
        n = 2 * self.k
        if self.j:
            return QuaternionElement(self.k, (self.i + self.k) % n, 1)
        return QuaternionElement(self.k, (-self.i) % n, 0)

    def identity(self) -> "QuaternionElement":
        return QuaternionElement(self.k, 0, 0)

    def encode(self) -> bytes:
        return b"Q" + struct.pack("<IIB", self.k, self.i, self.j)

    def __repr__(self) -> str:
        return f"Q{4 * self.k}(a^{self.i} b^{self.j})"


@dataclass(frozen=True)
class ProductPair(Element):
    """Element of a direct product; components may come from different domains."""

    left: Element
    right: Element

    def compose(self, other: Element) -> "ProductPair":
        if not isinstance(other, ProductPair):
            raise DomainMismatch(f"cannot combine ProductPair with {type(other).__name__}")
        return ProductPair(self.left.compose(other.left), self.right.compose(other.right))

    def inverse(self) -> "ProductPair":
        return ProductPair(self.left.inverse(), self.right.inverse())

    def identity(self) -> "ProductPair":
        return ProductPair(self.left.identity(), self.right.identity())

    def encode(self) -> bytes:
        return b"X" + _length_prefixed(self.left.encode()) + _length_prefixed(self.right.encode())

    def order(self) -> int:
        return math.lcm(self.left.order(), self.right.order())


class ActionTable:
    """
    Action of a group H on a group N by automorphisms, materialised on all of H.

    Maps are stored as index arrays over ``normal_elements``:
    ``images[h][x]`` is the index of alpha(h)(N[x]). The table is built from
    generator images by closure; the law alpha(h1·h2) = alpha(h1)∘alpha(h2) is
    enforced every time closure reaches an element of H a second time.
    """

    def __init__(
        self,
        normal_elements: Sequence[Element],
        normal_index: Dict[bytes, int],
        images: Dict[bytes, np.ndarray],
        quot_elements: Dict[bytes, Element],
    ):
        self.normal_elements = tuple(normal_elements)
        self.normal_index = normal_index
        self.images = images
        self.quot_elements = quot_elements

    @classmethod
    def from_generators(
        cls,
        normal_elements: Sequence[Element],
        normal_generators: Sequence[Element],
        quot_generators: Sequence[Element],
        generator_images: Sequence[np.ndarray],
    ) -> "ActionTable":
        normal_elements = list(normal_elements)
        normal_index = {x.encode(): idx for idx, x in enumerate(normal_elements)}
        size = len(normal_elements)

        checked = []
        for position, (gen, arr) in enumerate(zip(quot_generators, generator_images)):
            arr = np.asarray(arr, dtype=np.int64)
            if arr.shape != (size,) or not np.array_equal(np.sort(arr), np.arange(size)):
                raise NotAnAutomorphism(f"image of generator {position} ({gen!r}) is not a bijection of N")
            _check_automorphism(normal_elements, normal_index, normal_generators, arr, position)
            checked.append(arr)

        identity = quot_generators[0].identity()
        identity_key = identity.encode()
        images = {identity_key: np.arange(size)}
        quot_elements = {identity_key: identity}
        queue = deque([identity])
        while queue:
            h = queue.popleft()
            h_map = images[h.encode()]
            for position, (gen, gen_map) in enumerate(zip(quot_generators, checked)):
                product = h.compose(gen)
                key = product.encode()
                candidate = h_map[gen_map]
                if key in images:
                    if not np.array_equal(images[key], candidate):
                        raise InconsistentAction(
                            f"element {product!r} of H is reached by two words inducing different maps on N "
                            f"(via generator {position})"
                        )
                    continue
                images[key] = candidate
                quot_elements[key] = product
                queue.append(product)

        for arr in images.values():
            arr.flags.writeable = False
        logger.debug(f"Action table built on {len(images)} elements of H acting on {size} elements of N")
        return cls(normal_elements, normal_index, images, quot_elements)

    def apply(self, h: Element, n: Element) -> Element:
        try:
            arr = self.images[h.encode()]
            idx = self.normal_index[n.encode()]
        except KeyError as e:
            raise ElementNotInGroup(f"{h!r} or {n!r} is outside the action table") from e
        return self.normal_elements[int(arr[idx])]

    def is_trivial(self) -> bool:
        identity = np.arange(len(self.normal_elements))
        return all(np.array_equal(arr, identity) for arr in self.images.values())

    def homomorphism_law_holds(self) -> bool:
        """Full |H|^2 check of alpha(h1·h2) = alpha(h1)∘alpha(h2)."""
        for k1, h1 in self.quot_elements.items():
            for k2, h2 in self.quot_elements.items():
                product_key = h1.compose(h2).encode()
                if not np.array_equal(self.images[product_key], self.images[k1][self.images[k2]]):
                    return False
        return True


def _check_automorphism(
    normal_elements: List[Element],
    normal_index: Dict[bytes, int],
    normal_generators: Sequence[Element],
    arr: np.ndarray,
    position: int,
) -> None:
    """A bijection f with f(x·s) = f(x)·f(s) for every x and every generator s is an automorphism."""
    for s in normal_generators:
        s_idx = normal_index[s.encode()]
        f_s = normal_elements[int(arr[s_idx])]
        for x_idx, x in enumerate(normal_elements):
            lhs = int(arr[normal_index[x.compose(s).encode()]])
            rhs = normal_index[normal_elements[int(arr[x_idx])].compose(f_s).encode()]
            if lhs != rhs:
                raise NotAnAutomorphism(
                    f"image of generator {position} breaks the group law of N at x={x!r}, s={s!r}"
                )


@dataclass(frozen=True, eq=False)
class SemidirectPair(Element):
    """(n, h) with (n1, h1)·(n2, h2) = (n1·alpha(h1)(n2), h1·h2)."""

    normal: Element
    quot: Element
    action: ActionTable

    def _check(self, other: Element) -> "SemidirectPair":
        if not isinstance(other, SemidirectPair):
            raise DomainMismatch(f"cannot combine SemidirectPair with {type(other).__name__}")
        if other.action is not self.action:
            raise DomainMismatch("semidirect pairs built over different action tables")
        return other

    def compose(self, other: Element) -> "SemidirectPair":
        other = self._check(other)
        twisted = self.action.apply(self.quot, other.normal)
        return SemidirectPair(self.normal.compose(twisted), self.quot.compose(other.quot), self.action)

    def inverse(self) -> "SemidirectPair":
        quot_inv = self.quot.inverse()
        return SemidirectPair(self.action.apply(quot_inv, self.normal.inverse()), quot_inv, self.action)

    def identity(self) -> "SemidirectPair":
        return SemidirectPair(self.normal.identity(), self.quot.identity(), self.action)

    def encode(self) -> bytes:
        return b"S" + _length_prefixed(self.normal.encode()) + _length_prefixed(self.quot.encode())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SemidirectPair)
            and other.action is self.action
            and other.encode() == self.encode()
        )

    def __hash__(self) -> int:
        return hash(self.encode())


def compose(a: Element, b: Element) -> Element:
    return a.compose(b)


def inverse(a: Element) -> Element:
    return a.inverse()


def element_order(a: Element) -> int:
    return a.order()


def canonical_encode(a: Element) -> bytes:
    return a.encode()


def same_domain(a: Element, b: Element) -> bool:
    """True when a and b can be composed (same domain and structural parameters)."""
    try:
        a.compose(b)
    except DomainMismatch:
        return False
    return True


def commutator(x: Element, y: Element) -> Element:
    """x^-1 y^-1 x y."""
    return x.inverse().compose(y.inverse()).compose(x).compose(y)
