import pytest
from sympy.combinatorics import Permutation as SymPermutation
from sympy.combinatorics import PermutationGroup

from grouptype.constructors import alternating, cyclic, dihedral, direct_product, generalized_quaternion, pgl2
from grouptype.elements import Permutation, QuaternionElement
from grouptype.engine import (
    Subgroup,
    _generic_commutators,
    _permutation_commutators,
    derived_series,
    derived_subgroup,
    enumerate_closure,
    exponent,
    is_normal,
    is_perfect,
    is_solvable,
    subgroup_generated,
)
from grouptype.errors import CapExceeded, DomainMismatch, ElementNotInGroup, InvariantViolation


def as_sympy(group):
    return PermutationGroup([SymPermutation([int(v) for v in g.array]) for g in group.generators])


def test_closure_of_a_six_cycle():
    group = enumerate_closure([Permutation.from_cycles([(1, 2, 3, 4, 5, 6)], 6)])
    assert group.order == 6
    assert exponent(group) == 6


def test_closure_of_quaternion_generators():
    group = enumerate_closure([QuaternionElement(4, 1, 0), QuaternionElement(4, 0, 1)])
    assert group.order == 16
    assert group.exponent == 8


def test_closure_starts_at_identity_and_contains_generators():
    group = pgl2(5)
    assert group.elements[0].is_identity()
    for g in group.generators:
        assert g in group


def test_closure_is_deterministic():
    first = pgl2(7)
    second = pgl2(7)
    assert [x.encode() for x in first.elements] == [x.encode() for x in second.elements]


def test_closed_under_random_products(rng):
    group = pgl2(7)
    for _ in range(1000):
        x, y = rng.choice(group.elements), rng.choice(group.elements)
        assert x.compose(y) in group
        assert x.inverse() in group


def test_cap_exceeded():
    with pytest.raises(CapExceeded) as excinfo:
        enumerate_closure(pgl2(7).generators, cap=100)
    assert excinfo.value.cap == 100


def test_generators_must_share_a_domain():
    with pytest.raises(DomainMismatch):
        enumerate_closure([Permutation.identity_of(3), Permutation.identity_of(4)])


def test_empty_generator_list_is_rejected():
    with pytest.raises(ValueError):
        enumerate_closure([])


@pytest.mark.parametrize(
    "build, expected",
    [
        (lambda: cyclic(6), 6),
        (lambda: generalized_quaternion(8), 4),
        (lambda: alternating(4), 6),
        (lambda: pgl2(7), 168),
    ],
)
def test_exponent(build, expected):
    assert exponent(build()) == expected


def test_subgroup_generated_by_identity_is_trivial():
    a4 = alternating(4)
    assert subgroup_generated(a4, [a4.identity]).order == 1


def test_klein_subgroup_of_a4():
    a4 = alternating(4)
    seed = [Permutation.from_cycles([(1, 2), (3, 4)], 4), Permutation.from_cycles([(1, 3), (2, 4)], 4)]
    klein = subgroup_generated(a4, seed)
    assert klein.order == 4
    assert is_normal(a4, klein)


def test_subgroup_seed_outside_group():
    a4 = alternating(4)
    with pytest.raises(ElementNotInGroup):
        subgroup_generated(a4, [Permutation.from_cycles([(1, 2)], 4)])


def test_lagrange_is_enforced():
    a4 = alternating(4)
    with pytest.raises(InvariantViolation):
        Subgroup(a4, a4.elements[:5])


def test_derived_subgroup_of_abelian_group_is_trivial():
    assert derived_subgroup(cyclic(12)).order == 1
    assert derived_subgroup(direct_product(cyclic(2), cyclic(4))).order == 1


def test_derived_subgroup_of_a4():
    a4 = alternating(4)
    derived = derived_subgroup(a4)
    assert derived.order == 4
    assert is_normal(a4, derived)


def test_derived_subgroup_of_pgl2_7_is_perfect_of_order_168():
    group = pgl2(7)
    derived = derived_subgroup(group)
    assert derived.order == 168
    assert is_normal(group, derived)
    assert is_perfect(derived)


@pytest.mark.parametrize(
    "build, sizes",
    [
        (lambda: cyclic(6), [6, 1]),
        (lambda: pgl2(7), [336, 168, 168]),
        (lambda: alternating(4), [12, 4, 1]),
        (lambda: generalized_quaternion(16), [16, 4, 1]),
        (lambda: cyclic(1), [1]),
    ],
)
def test_derived_series_sizes(build, sizes):
    assert [term.order for term in derived_series(build())] == sizes


def test_derived_series_of_quaternion_group_ends_trivially():
    assert derived_series(generalized_quaternion(16))[-1].order == 1


@pytest.mark.parametrize(
    "build, expected",
    [
        (lambda: direct_product(cyclic(12), generalized_quaternion(8)), True),
        (lambda: pgl2(7), False),
        (lambda: cyclic(1), True),
        (lambda: alternating(5), False),
    ],
)
def test_is_solvable(build, expected):
    assert is_solvable(build()) is expected


def test_is_perfect_conventions():
    assert is_perfect(cyclic(1))
    assert not is_perfect(cyclic(2))
    assert is_perfect(alternating(5))


@pytest.mark.parametrize(
    "left, right",
    [
        (lambda: cyclic(2), lambda: cyclic(3)),
        (lambda: alternating(4), lambda: cyclic(2)),
        (lambda: alternating(5), lambda: cyclic(2)),
        (lambda: dihedral(8), lambda: cyclic(3)),
        (lambda: pgl2(3), lambda: generalized_quaternion(8)),
    ],
)
def test_solvability_of_direct_products(left, right):
    a, b = left(), right()
    assert is_solvable(direct_product(a, b)) == (is_solvable(a) and is_solvable(b))


def test_derived_subgroup_is_normal_in_every_small_group(small_pool):
    for name, group in small_pool.items():
        assert is_normal(group, derived_subgroup(group)), name


@pytest.mark.parametrize(
    "build",
    [lambda: pgl2(7), lambda: alternating(5), lambda: dihedral(8), lambda: pgl2(5), lambda: alternating(4)],
)
def test_order_and_solvability_agree_with_sympy(build):
    group = build()
    reference = as_sympy(group)
    assert group.order == reference.order()
    assert is_solvable(group) == reference.is_solvable


def test_vectorised_commutators_match_elementwise_ones():
    group = pgl2(3)
    fast = {c.encode() for c in _permutation_commutators(group.elements)}
    slow = {c.encode() for c in _generic_commutators(group.elements)}
    assert fast == slow
    assert len(fast) == 12


def test_vectorised_commutators_are_distinct():
    group = alternating(5)
    found = _permutation_commutators(group.elements)
    keys = [c.encode() for c in found]
    assert len(keys) == len(set(keys)) == 60
