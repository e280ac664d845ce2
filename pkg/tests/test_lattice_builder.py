from __future__ import annotations

import math

import pytest

from group_engine import closure_mask, conjugate, is_closed_mask, named_group
from lattice_builder import (
    LatticeCapExceeded,
    LatticeInvariantError,
    assemble_lattice,
    covering_relation,
    enumerate_subgroups,
    maximal_subgroups,
    node_generators,
    subgroups_by_subset_search,
)
from utils.group_spec import build_group


@pytest.mark.parametrize(
    "spec, subgroups",
    [("trivial", 1), ("C7", 2), ("D4", 5), ("S3", 6), ("C12", 6), ("A4", 10), ("D8", 10), ("S4", 30), ("A5", 59)],
)
def test_subgroup_counts(lattice_of, spec, subgroups):
    assert len(lattice_of(spec)) == subgroups


def test_s5_has_156_subgroups(s5):
    assert len(s5) == 156


@pytest.mark.parametrize("spec, covers", [("trivial", 0), ("D4", 6), ("S3", 8)])
def test_covering_pair_counts(lattice_of, spec, covers):
    assert len(covering_relation(lattice_of(spec))) == covers


@pytest.mark.parametrize("spec", ["S3", "A4", "D8", "D12", "S4", "S5"])
def test_two_seed_orders_agree(spec):
    g = build_group(spec)
    forward = enumerate_subgroups(g, seed_order="forward")
    reverse = enumerate_subgroups(g, seed_order="reverse")
    assert [n.mask for n in forward.nodes] == [n.mask for n in reverse.nodes]
    assert forward.covers == reverse.covers


def test_bad_seed_order():
    with pytest.raises(ValueError):
        enumerate_subgroups(build_group("S3"), seed_order="sideways")


@pytest.mark.parametrize("spec", ["S3", "D4", "C12", "A4", "D8", "D10", "D12", "D16", "D18", "S4"])
def test_join_closure_matches_exhaustive_subset_search(lattice_of, spec):
    lattice = lattice_of(spec)
    assert subgroups_by_subset_search(lattice.parent) == [n.mask for n in lattice.nodes]


def test_nodes_are_sorted_and_closed(s4):
    keys = [(n.order, n.mask) for n in s4.nodes]
    assert keys == sorted(keys)
    assert s4.order(s4.bottom) == 1
    assert s4.order(s4.top) == 24
    assert all(is_closed_mask(s4.parent, n.mask) for n in s4.nodes)


def test_node_generators_regenerate_the_node(s4):
    for i, node in enumerate(s4.nodes):
        gens = s4.generators[i]
        assert closure_mask(s4.parent, gens) == node.mask
        assert gens == node_generators(s4.parent, node.mask)


def test_below_above_and_covers_are_consistent(s4):
    for j in range(len(s4)):
        for i in range(len(s4)):
            a, b = s4.nodes[i].mask, s4.nodes[j].mask
            strict = i != j and a & b == a
            assert bool((s4.below[j] >> i) & 1) == strict
            assert bool((s4.above[i] >> j) & 1) == strict
    for child, parent in s4.covers:
        assert s4.contains(child, parent)
        between = [k for k in range(len(s4)) if s4.contains(child, k) and s4.contains(k, parent)]
        assert sorted(between) == sorted({child, parent})


def test_contains_modes_agree(s4):
    masks = [n.mask for n in s4.nodes]
    bitset_mode = assemble_lattice(s4.parent, masks, contains_threshold=0)
    for i in range(len(s4)):
        for j in range(len(s4)):
            assert s4.contains(i, j) == bitset_mode.contains(i, j)


def test_maximal_subgroups_of_s5(s5):
    maxes = maximal_subgroups(s5, s5.top)
    assert len(maxes) == 22
    orders = sorted(s5.order(m) for m in maxes)
    assert {o: orders.count(o) for o in set(orders)} == {12: 10, 20: 6, 24: 5, 60: 1}


def test_lattice_cap():
    with pytest.raises(LatticeCapExceeded):
        enumerate_subgroups(build_group("S4"), cap=10)


def test_assemble_requires_bottom_and_top():
    g = named_group("symmetric", 3)
    with pytest.raises(LatticeInvariantError):
        assemble_lattice(g, [1])


def test_node_of_unknown_mask(s3):
    with pytest.raises(LatticeInvariantError):
        s3.node_of(0b110)
    assert s3.node_of(s3.parent.full_mask) == s3.top


@pytest.mark.parametrize("spec", ["S4", "D12", "S5"])
def test_lattice_is_closed_under_conjugation(lattice_of, spec):
    lattice = lattice_of(spec)
    for node in lattice.nodes:
        for g in range(lattice.parent.order):
            assert conjugate(node, g).mask in lattice.index_of_mask


@pytest.mark.parametrize("spec", ["S4", "A5", "S5", "C30"])
def test_every_node_order_divides_the_group_order(lattice_of, spec):
    lattice = lattice_of(spec)
    parent = lattice.parent
    assert math.factorial(parent.degree) % parent.order == 0
    for i in range(len(lattice)):
        assert parent.order % lattice.order(i) == 0
