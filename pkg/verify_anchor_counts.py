"""Verification of the anchor counts (no CLI, no files).

Rebuilds the small lattices from scratch and checks the values every other
number in the audit leans on: subgroup counts, g and h of S3/S4/A4, the
dihedral and cyclic anchors, three-way method agreement, and the S5
maximal-subgroup census.

Run:  python verify_anchor_counts.py
"""
import math
import sys

from chain_counter import (
    FactoredInteger,
    count_chains,
    g_cyclic_multinomial,
    h_by_inclusion_exclusion,
    h_dihedral_prime_power,
    naive_chain_oracle,
)
from group_engine import intersect, named_group, subgroup_from_permutations
from iso_classifier import label_census
from lattice_builder import enumerate_subgroups, maximal_subgroups
from permutations import parse_generator_list, parse_permutation

failures = 0


def check(name, cond):
    global failures
    print(f"{'PASS' if cond else 'FAIL'}  {name}")
    if not cond:
        failures += 1


def lattice(family, n):
    return enumerate_subgroups(named_group(family, n))


# ── A: the S3 / S4 / A4 anchors ────────────────────────────────────────────
s3 = lattice("symmetric", 3)
s4 = lattice("symmetric", 4)
a4 = lattice("alternating", 4)
c3, c4, ca4 = count_chains(s3), count_chains(s4), count_chains(a4)
print(f"\nA. S3 g={c3.g} h={c3.h}   S4 g={c4.g} h={c4.h}   A4 g={ca4.g}")
check("A1 S3 has 6 subgroups", len(s3) == 6)
check("A2 S4 has 30 subgroups", len(s4) == 30)
check("A3 g(S3) = 4 and h(S3) = 10", (c3.g, c3.h) == (4, 10))
check("A4 g(S4) = 44", c4.g == 44)
check("A5 h(S4) = 232", c4.h == 232)
check("A6 g(A4) = 7", ca4.g == 7)

# ── B: dihedral and cyclic anchors ─────────────────────────────────────────
h_dih = {order: count_chains(lattice("dihedral", order)).h for order in (4, 6, 8, 20)}
print(f"\nB. dihedral h by order: {h_dih}")
check("B1 h(D4) = 8", h_dih[4] == 8)
check("B2 h(D6) = 10", h_dih[6] == 10)
check("B3 h(D8) = 32", h_dih[8] == 32)
check("B4 h(D20) = 100", h_dih[20] == 100)
check("B5 h(C3) = 2", count_chains(lattice("cyclic", 3)).h == 2)
check("B6 dihedral closed form = DP for p=2, m=2", h_dihedral_prime_power(2, 2) == h_dih[8])
check(
    "B7 cyclic multinomial = DP for n=60",
    g_cyclic_multinomial(FactoredInteger.of(60)) == count_chains(lattice("cyclic", 60)).g,
)

# ── C: method agreement ────────────────────────────────────────────────────
for name, lat in (("S3", s3), ("S4", s4), ("A4", a4)):
    dp = count_chains(lat)
    ie_h, _ = h_by_inclusion_exclusion(lat)
    check(f"C {name}: DP = naive = inclusion-exclusion", naive_chain_oracle(lat) == (dp.g, dp.h) and ie_h == dp.h)

# ── D: S5 ──────────────────────────────────────────────────────────────────
s5 = lattice("symmetric", 5)
maxes = maximal_subgroups(s5, s5.top)
orders = sorted(s5.order(m) for m in maxes)
census = label_census(s5, maxes)
ie_h, breakdown = h_by_inclusion_exclusion(s5)
print(f"\nD. S5: {len(s5)} subgroups, maximal census {census}, trivial from rank {breakdown.trivial_from_rank}")
check("D1 S5 has 156 subgroups", len(s5) == 156)
check("D2 maximal orders {12:10, 20:6, 24:5, 60:1}",
      {o: orders.count(o) for o in set(orders)} == {12: 10, 20: 6, 24: 5, 60: 1})
check("D3 maximal types {A5:1, D12:10, F20:6, S4:5}", census == {"A5": 1, "D12": 10, "F20": 6, "S4": 5})
check("D4 inclusion-exclusion = DP", ie_h == count_chains(s5).h)
check(
    "D5 c_r = (-1)^(r-1) C(22, r) for r >= 8",
    all(breakdown.c_r(r) == (-1) ** (r - 1) * math.comb(22, r) for r in range(8, 23)),
)


def s5_subgroup(gens):
    return subgroup_from_permutations(s5.parent, parse_generator_list(gens, 5))


ga15 = s5_subgroup("(1,2,3,4,5);(2,3,5,4)")
check("D6 <(1,2,3,4,5),(2,3,5,4)> is an order-20 maximal subgroup",
      ga15.order == 20 and s5.node_of(ga15.mask) in maxes)
m2, m3 = s5_subgroup("(1,2,3);(1,2);(4,5)"), s5_subgroup("(1,2,4);(1,2);(3,5)")
check("D7 S{1,2,3}xS{4,5} and S{1,2,4}xS{3,5} meet in <(1,2)>",
      intersect(m2, m3) == subgroup_from_permutations(s5.parent, [parse_permutation("(1,2)", 5)]))

print(f"\n{'ALL PASS' if not failures else f'{failures} FAILED'}")
sys.exit(1 if failures else 0)
