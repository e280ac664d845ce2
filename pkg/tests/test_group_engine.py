from __future__ import annotations

import math
import random

import pytest
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup

from group_engine import (
    ClosureCapExceeded,
    FamilyParameterError,
    GroupEngineError,
    GroupFamily,
    ParentMismatchError,
    bits,
    close_generators,
    conjugate,
    intersect,
    is_closed_mask,
    mask_of,
    named_group,
    subgroup_from_generators,
    subgroup_from_permutations,
    trivial_subgroup,
    whole_group,
)
from permutations import (
    DegreeMismatchError,
    Permutation,
    compose,
    identity,
    inverse,
    parse_generator_list,
    parse_permutation,
)


def _sympy_order(gens, degree):
    return PermutationGroup([SympyPermutation([i - 1 for i in g.images]) for g in gens]).order()


def test_bits_and_mask_of():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert list(bits(0)) == []


def test_closure_of_s3():
    gens = [parse_permutation("(1,2)", 3), parse_permutation("(1,2,3)", 3)]
    g = close_generators(gens)
    assert g.order == 6
    assert g.elements[0] == identity(3)
    assert len(set(g.elements)) == 6


def test_closure_ignores_generator_order_and_duplicates():
    a = parse_permutation("(1,2,3,4,5)", 5)
    b = parse_permutation("(1,2)", 5)
    g1 = close_generators([a, b])
    g2 = close_generators([b, a, b, identity(5)])
    assert g1.elements == g2.elements
    assert g1.generators == g2.generators


def test_closure_cap_is_an_error_not_a_truncation():
    gens = [parse_permutation("(1,2)", 4), parse_permutation("(1,2,3,4)", 4)]
    with pytest.raises(ClosureCapExceeded):
        close_generators(gens, cap=5)


def test_closure_rejects_mixed_degrees():
    with pytest.raises(DegreeMismatchError):
        close_generators([parse_permutation("(1,2)", 2), parse_permutation("(1,2)", 3)])


def test_closure_without_generators_needs_a_degree():
    with pytest.raises(GroupEngineError):
        close_generators([])
    assert close_generators([], degree=3).order == 1


@pytest.mark.parametrize(
    "family, n, order, degree",
    [
        ("symmetric", 1, 1, 1),
        ("symmetric", 3, 6, 3),
        ("symmetric", 5, 120, 5),
        ("alternating", 3, 3, 3),
        ("alternating", 4, 12, 4),
        ("alternating", 5, 60, 5),
        ("cyclic", 1, 1, 1),
        ("cyclic", 12, 12, 12),
        ("dihedral", 2, 2, 2),
        ("dihedral", 4, 4, 4),
        ("dihedral", 6, 6, 3),
        ("dihedral", 10, 10, 5),
        ("dihedral", 20, 20, 10),
    ],
)
def test_named_group_orders(family, n, order, degree):
    g = named_group(family, n)
    assert g.order == order
    assert g.degree == degree


def test_named_group_names():
    assert named_group(GroupFamily.SYMMETRIC, 5).label() == "S5"
    assert named_group("dihedral", 20).label() == "D20"
    assert named_group("cyclic", 7).label() == "C7"


def test_order_four_dihedral_is_klein():
    g = named_group("dihedral", 4)
    assert sorted(g.element_orders) == [1, 2, 2, 2]


@pytest.mark.parametrize(
    "family, n",
    [("dihedral", 9), ("dihedral", 202), ("symmetric", 7), ("alternating", 8), ("cyclic", 201), ("cyclic", 0)],
)
def test_named_group_parameter_errors(family, n):
    with pytest.raises(FamilyParameterError):
        named_group(family, n)


def test_orders_agree_with_sympy():
    rng = random.Random(1234)
    for degree in (4, 5, 6):
        for _ in range(6):
            gens = []
            for _ in range(rng.randint(1, 3)):
                images = list(range(1, degree + 1))
                rng.shuffle(images)
                gens.append(Permutation(tuple(images)))
            assert close_generators(gens).order == _sympy_order(gens, degree)
    for family, n in (("alternating", 5), ("symmetric", 5), ("dihedral", 20), ("cyclic", 30)):
        g = named_group(family, n)
        assert g.order == _sympy_order(g.generators, g.degree)


def test_multiplication_table_and_inverses():
    g = named_group("symmetric", 4)
    rng = random.Random(3)
    for _ in range(200):
        i, j = rng.randrange(g.order), rng.randrange(g.order)
        assert g.elements[g.mul[i, j]] == compose(g.elements[i], g.elements[j])
        assert g.product(i, j) == g.mul[i, j]
    for i, p in enumerate(g.elements):
        assert g.elements[g.inv[i]] == inverse(p)
    assert not g.mul.flags.writeable


def test_subgroup_handles():
    g = named_group("symmetric", 4)
    v4 = subgroup_from_permutations(g, [parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,3)(2,4)", 4)])
    assert v4.order == 4
    assert 0 in v4
    assert is_closed_mask(g, v4.mask)
    assert trivial_subgroup(g).order == 1
    assert whole_group(g).order == 24
    assert v4.is_subgroup_of(whole_group(g))
    c3 = subgroup_from_permutations(g, [parse_permutation("(1,2,3)", 4)])
    assert intersect(v4, c3).order == 1


def test_conjugate_preserves_order_and_closure():
    g = named_group("symmetric", 5)
    h = subgroup_from_permutations(g, [parse_permutation("(1,2,3)", 5), parse_permutation("(1,2)", 5)])
    for x in range(0, g.order, 7):
        k = conjugate(h, x)
        assert k.order == h.order
        assert is_closed_mask(g, k.mask)
    # conjugating by an element of h gives h back
    assert conjugate(h, h.indices()[1]).mask == h.mask


def test_is_closed_mask_rejects_non_subgroups():
    g = named_group("symmetric", 3)
    assert not is_closed_mask(g, 0b10)          # identity missing
    t = g.index(parse_permutation("(1,2)", 3))
    u = g.index(parse_permutation("(1,3)", 3))
    assert not is_closed_mask(g, mask_of([0, t, u]))


def test_parent_mismatch():
    a = named_group("symmetric", 3)
    b = named_group("symmetric", 3)
    with pytest.raises(ParentMismatchError):
        intersect(whole_group(a), whole_group(b))


def test_subgroup_from_bad_index():
    g = named_group("cyclic", 4)
    with pytest.raises(GroupEngineError):
        subgroup_from_generators(g, [4])
    with pytest.raises(GroupEngineError):
        g.index(parse_permutation("(1,2)", 4))


@pytest.mark.parametrize(
    "gens, order",
    [
        ("(1,2,3,4,5);(2,3,5,4)", 20),
        ("(1,2,3,4,5);(1,2,3)", 60),
        ("(1,2,3);(2,3)(4,5)", 6),
        ("(2,4)(3,5);(1,2,3,5,4)", 10),
        ("(1,2,3,4);(1,4)", 24),
    ],
)
def test_closure_of_printed_generating_sets(gens, order):
    table = close_generators(parse_generator_list(gens, 5), 1000)
    assert table.order == order
    assert table.elements[0] == identity(5)


def test_intersection_of_two_order_twelve_subgroups():
    g = named_group("symmetric", 5)
    m2 = subgroup_from_permutations(g, parse_generator_list("(1,2,3);(1,2);(4,5)", 5))
    m3 = subgroup_from_permutations(g, parse_generator_list("(1,2,4);(1,2);(3,5)", 5))
    assert m2.order == m3.order == 12
    meet = intersect(m2, m3)
    assert meet == subgroup_from_permutations(g, [parse_permutation("(1,2)", 5)])
    assert meet.order == 2


def test_intersect_is_commutative_associative_idempotent():
    g = named_group("symmetric", 4)
    rng = random.Random(11)

    def random_subgroup():
        return subgroup_from_generators(g, rng.sample(range(g.order), rng.randint(0, 2)))

    for _ in range(40):
        a, b, c = random_subgroup(), random_subgroup(), random_subgroup()
        assert intersect(a, b) == intersect(b, a)
        assert intersect(intersect(a, b), c) == intersect(a, intersect(b, c))
        assert intersect(a, a) == a
        assert is_closed_mask(g, intersect(a, b).mask)


@pytest.mark.parametrize("family, n", [("symmetric", 4), ("symmetric", 5), ("alternating", 5), ("dihedral", 12)])
def test_lagrange(family, n):
    g = named_group(family, n)
    assert math.factorial(g.degree) % g.order == 0
    rng = random.Random(n)
    for _ in range(25):
        h = subgroup_from_generators(g, rng.sample(range(g.order), 2))
        assert g.order % h.order == 0
