from __future__ import annotations

import random

import pytest
from sympy.combinatorics import Permutation as SympyPermutation

from permutations import (
    DegreeMismatchError,
    DuplicatePointError,
    MalformedCycleError,
    Permutation,
    PermutationError,
    PointOutOfRangeError,
    compose,
    cycles,
    format_permutation,
    from_cycles,
    identity,
    inverse,
    order_of,
    parse_generator_list,
    parse_permutation,
    power,
)


def _random_perm(rng: random.Random, degree: int) -> Permutation:
    images = list(range(1, degree + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_identity_spellings():
    assert parse_permutation("", 4) == identity(4)
    assert parse_permutation("()", 4) == identity(4)
    assert parse_permutation("  ( ) ", 4) == identity(4)
    assert format_permutation(identity(5)) == "()"


def test_format_is_canonical():
    assert format_permutation(parse_permutation("(3,1,2)", 3)) == "(1,2,3)"
    assert format_permutation(parse_permutation("(5,4)(2,1)", 5)) == "(1,2)(4,5)"
    assert format_permutation(parse_permutation("( 2 , 4 )( 1, 3 , 5)", 5)) == "(1,3,5)(2,4)"


def test_parse_format_round_trip():
    rng = random.Random(20240501)
    for degree in range(1, 8):
        for _ in range(25):
            p = _random_perm(rng, degree)
            assert parse_permutation(format_permutation(p), degree) == p


def test_degree_is_part_of_the_value():
    assert parse_permutation("(1,2)", 2) != parse_permutation("(1,2)", 5)


@pytest.mark.parametrize(
    "text, degree, error",
    [
        ("(1,2,1)", 3, DuplicatePointError),
        ("(1,2)(2,3)", 3, DuplicatePointError),
        ("(0,1)", 3, PointOutOfRangeError),
        ("(1,6)", 5, PointOutOfRangeError),
        ("(1,2", 3, MalformedCycleError),
        ("1,2)", 3, MalformedCycleError),
        ("(1,,2)", 3, MalformedCycleError),
        ("(1,2,)", 3, MalformedCycleError),
        ("(a,b)", 3, MalformedCycleError),
    ],
)
def test_parse_errors(text, degree, error):
    with pytest.raises(error):
        parse_permutation(text, degree)


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_permutation("(1,1)", 2)
    assert issubclass(PermutationError, ValueError)


def test_non_bijection_rejected():
    with pytest.raises(PermutationError):
        Permutation((1, 1, 2))


def test_compose_applies_right_factor_first():
    p = parse_permutation("(1,2)", 3)
    q = parse_permutation("(2,3)", 3)
    pq = compose(p, q)
    assert [pq(i) for i in (1, 2, 3)] == [p(q(i)) for i in (1, 2, 3)]
    assert format_permutation(pq) == "(1,2,3)"
    assert format_permutation(compose(q, p)) == "(1,3,2)"


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(identity(3), identity(4))


def test_group_axioms_on_random_samples():
    rng = random.Random(7)
    for degree in (3, 5, 6):
        e = identity(degree)
        for _ in range(30):
            a, b, c = (_random_perm(rng, degree) for _ in range(3))
            assert compose(a, compose(b, c)) == compose(compose(a, b), c)
            assert compose(a, e) == a == compose(e, a)
            assert compose(a, inverse(a)).is_identity()
            assert compose(inverse(a), a).is_identity()


def test_order_matches_iterated_power_and_sympy():
    rng = random.Random(11)
    for degree in range(1, 8):
        for _ in range(20):
            p = _random_perm(rng, degree)
            k, q = 1, p
            while not q.is_identity():
                q = compose(q, p)
                k += 1
            assert order_of(p) == k
            assert order_of(p) == SympyPermutation([i - 1 for i in p.images]).order()


def test_power():
    p = parse_permutation("(1,2,3,4,5)", 5)
    assert power(p, 0) == identity(5)
    assert power(p, 5) == identity(5)
    assert power(p, 2) == compose(p, p)
    assert power(p, -1) == inverse(p)


def test_cycles_start_at_smallest_point():
    p = from_cycles([[4, 2], [5, 3, 1]], 6)
    assert cycles(p) == [(1, 5, 3), (2, 4)]


def test_from_cycles_validates():
    with pytest.raises(PointOutOfRangeError):
        from_cycles([[1, 7]], 6)
    with pytest.raises(DuplicatePointError):
        from_cycles([[1, 2], [2, 3]], 4)


def test_parse_generator_list():
    gens = parse_generator_list("(1,2);(1,2,3)", 3)
    assert [format_permutation(g) for g in gens] == ["(1,2)", "(1,2,3)"]
    assert len(parse_generator_list("(1,2); ;", 3)) == 1
    assert parse_generator_list("", 3) == []


def test_parse_four_cycle_on_five_points():
    assert parse_permutation("(2,3,5,4)", 5).images == (1, 3, 5, 2, 4)
    assert parse_permutation("(2, 3, 5, 4 )", 5) == parse_permutation("(2,3,5,4)", 5)
