import numpy as np
import pytest

from grouptype.constructors import (
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_generator_file,
    generalized_quaternion,
    pgl2,
    power_automorphism,
    semidirect_product,
    sharply_transitive_count,
    write_generator_file,
)
from grouptype.engine import GroupId, is_solvable
from grouptype.errors import (
    CapExceeded,
    DegreeOutOfRange,
    DomainMismatch,
    NotMultipleOfFour,
    NotPrime,
    OddOrder,
    ParseError,
    TooSmall,
)
from grouptype.spectra import exponent_type, order_type, spectra_equal


def counts(group):
    return {n: c for n, c in order_type(group).counts.items() if c}


def test_cyclic():
    assert cyclic(1).order == 1
    assert counts(cyclic(7)) == {1: 1, 7: 6}
    assert cyclic(12).exponent == 12


def test_cyclic_rejects_zero():
    with pytest.raises(TooSmall):
        cyclic(0)


def test_dihedral_of_order_two_is_c2():
    group = dihedral(2)
    assert group.order == 2
    assert counts(group) == {1: 1, 2: 1}


def test_dihedral_of_order_eight():
    assert counts(dihedral(8)) == {1: 1, 2: 5, 4: 2}


def test_dihedral_of_order_six_is_nonabelian():
    group = dihedral(6)
    assert group.exponent == 6
    a, b = group.generators
    assert a.compose(b) != b.compose(a)


def test_dihedral_of_order_four_is_klein():
    assert counts(dihedral(4)) == {1: 1, 2: 3}


@pytest.mark.parametrize("order, error", [(7, OddOrder), (1, TooSmall), (0, TooSmall)])
def test_dihedral_rejects(order, error):
    with pytest.raises(error):
        dihedral(order)


def test_quaternion_q8():
    assert counts(generalized_quaternion(8)) == {1: 1, 2: 1, 4: 6}


def test_quaternion_q16():
    group = generalized_quaternion(16)
    assert group.exponent == 8
    assert counts(group)[2] == 1


@pytest.mark.parametrize("order, error", [(10, NotMultipleOfFour), (4, TooSmall), (0, TooSmall)])
def test_quaternion_rejects(order, error):
    with pytest.raises(error):
        generalized_quaternion(order)


def test_alternating():
    assert alternating(3).order == 3
    a4 = alternating(4)
    assert counts(a4) == {1: 1, 2: 3, 3: 8}
    assert is_solvable(a4)
    assert alternating(6).order == 360


@pytest.mark.parametrize("degree", [2, 9])
def test_alternating_degree_range(degree):
    with pytest.raises(DegreeOutOfRange):
        alternating(degree)


def test_direct_product_of_coprime_cyclics():
    product = direct_product(cyclic(2), cyclic(3))
    assert product.order == 6
    assert spectra_equal(order_type(product), order_type(cyclic(6)))


def test_direct_product_c12_q8():
    assert direct_product(cyclic(12), generalized_quaternion(8)).order == 96


def test_direct_product_with_trivial_group():
    a4 = alternating(4)
    product = direct_product(a4, cyclic(1))
    assert spectra_equal(exponent_type(product), exponent_type(a4))


def test_direct_product_respects_cap():
    with pytest.raises(CapExceeded):
        direct_product(cyclic(12), generalized_quaternion(8), cap=50)


def test_semidirect_with_trivial_action_matches_direct_product():
    c7, c3 = cyclic(7), cyclic(3)
    semidirect = semidirect_product(c7, c3, [power_automorphism(c7, 1)])
    assert spectra_equal(order_type(semidirect), order_type(direct_product(c7, c3)))
    assert counts(semidirect) == {1: 1, 3: 2, 7: 6, 21: 12}


def test_frobenius_group_of_order_21():
    c7 = cyclic(7)
    group = semidirect_product(c7, cyclic(3), [power_automorphism(c7, 2)])
    assert group.order == 21
    assert counts(group) == {1: 1, 3: 14, 7: 6}


def test_semidirect_accepts_index_arrays():
    c7 = cyclic(7)
    square = power_automorphism(c7, 2)
    images = np.array([c7.index[square(x).encode()] for x in c7.elements])
    group = semidirect_product(c7, cyclic(3), [images])
    assert counts(group) == {1: 1, 3: 14, 7: 6}


def test_semidirect_needs_one_map_per_generator():
    c7 = cyclic(7)
    with pytest.raises(ValueError):
        semidirect_product(c7, cyclic(3), [])


def test_semidirect_over_a_nonabelian_normal_subgroup():
    # C3 acting on Q8 by cycling i -> j -> k; the result has order 24 and is SL(2,3).
    q8 = generalized_quaternion(8)
    a, b = q8.generators
    image_a, image_b = b, a.compose(b)

    def rotate(x):
        # x = a^i b^j
        return (image_a ** x.i).compose(image_b ** x.j)

    group = semidirect_product(q8, cyclic(3), [rotate])
    assert group.order == 24
    assert counts(group) == {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_pgl2_order(p):
    group = pgl2(p)
    assert group.order == p * (p * p - 1)
    assert group.degree == p + 1


def test_pgl2_7_is_sharply_three_transitive():
    group = pgl2(7)
    # Points 0 and 1 of the line are 1 and 2, infinity is 8.
    assert sharply_transitive_count(group, [1, 2, 8]) == 8 * 7 * 6 == group.order


def test_pgl2_rejects():
    with pytest.raises(NotPrime):
        pgl2(8)
    with pytest.raises(DegreeOutOfRange):
        pgl2(37)


def test_from_generator_file_c2(tmp_path):
    path = tmp_path / "c2.grp"
    path.write_text("degree 2\ngen (1 2)\n")
    group = from_generator_file(path)
    assert group.order == 2
    assert group.provenance is None


def test_from_generator_file_s3(data_dir):
    group = from_generator_file(data_dir / "s3.grp")
    assert group.order == 1344
    assert group.provenance == GroupId(1344, 6967)


def test_from_generator_file_repeated_point(tmp_path):
    path = tmp_path / "bad.grp"
    path.write_text("# broken\ndegree 3\ngen (1 2 2)\n")
    with pytest.raises(ParseError) as excinfo:
        from_generator_file(path)
    assert excinfo.value.line == 3


def test_from_generator_file_respects_cap(data_dir):
    with pytest.raises(CapExceeded):
        from_generator_file(data_dir / "s2.grp", cap=500)


def test_write_then_read_gives_same_elements(tmp_path):
    group = pgl2(5)
    path = write_generator_file(group, tmp_path / "pgl2_5.grp", group_id=GroupId(120, 34))
    again = from_generator_file(path)
    assert {x.encode() for x in again.elements} == {x.encode() for x in group.elements}
    assert again.provenance == GroupId(120, 34)


def test_write_trivial_group(tmp_path):
    path = write_generator_file(cyclic(1), tmp_path / "trivial.grp")
    assert from_generator_file(path).order == 1


def test_write_rejects_non_permutation_groups(tmp_path):
    with pytest.raises(DomainMismatch):
        write_generator_file(generalized_quaternion(8), tmp_path / "q8.grp")
