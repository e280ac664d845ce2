# iso_classifier.py
"""Isomorphism-type labels for subgroups, from cheap invariants.

No isomorphism testing happens here. A subgroup is reduced to a
GroupFingerprint (order, element-order histogram, abelian and cyclic flags,
center order, derived-subgroup order) and looked up in a fixed table of the
types that occur inside S5 and inside the dihedral and cyclic families. A
miss is reported as ``unclassified(order=N)``, never as a near match.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from sympy import divisors, totient

from group_engine import SubgroupHandle, bits, closure_mask
from lattice_builder import SubgroupLattice, maximal_subgroups
from utils.logger import log_debug
from utils.settings import ENGINE

Histogram = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class GroupFingerprint:
    order: int
    histogram: Histogram        # sorted (element order, count) pairs
    is_abelian: bool
    is_cyclic: bool
    center_order: int
    derived_order: int

    @property
    def histogram_map(self) -> Dict[int, int]:
        return dict(self.histogram)


# ---------------------------------------------------------------------------
# Fingerprints
# ---------------------------------------------------------------------------

def fingerprint(h: SubgroupHandle) -> GroupFingerprint:
    parent = h.parent
    idx = np.fromiter(bits(h.mask), dtype=np.int64)
    order = int(idx.size)

    sub = parent.mul[np.ix_(idx, idx)]
    commuting = sub == sub.T
    center_order = int(np.all(commuting, axis=1).sum())
    is_abelian = center_order == order

    orders = Counter(parent.element_orders[i] for i in idx.tolist())
    histogram = tuple(sorted(orders.items()))

    if is_abelian:
        derived_order = 1
    else:
        inv = parent.inv[idx]
        # a^-1 b^-1 a b for every pair (a, b)
        left = parent.mul[np.ix_(inv, inv)]
        comms = np.unique(parent.mul[left, sub])
        derived_order = closure_mask(parent, comms.tolist()).bit_count()

    return GroupFingerprint(
        order=order,
        histogram=histogram,
        is_abelian=is_abelian,
        is_cyclic=orders.get(order, 0) > 0,
        center_order=center_order,
        derived_order=derived_order,
    )


# ---------------------------------------------------------------------------
# Reference table
# ---------------------------------------------------------------------------

def _fp(order: int, hist: Dict[int, int], *, abelian: bool, center: int, derived: int) -> GroupFingerprint:
    return GroupFingerprint(
        order=order,
        histogram=tuple(sorted(hist.items())),
        is_abelian=abelian,
        is_cyclic=hist.get(order, 0) > 0,
        center_order=center,
        derived_order=derived,
    )


def _cyclic_histogram(n: int) -> Dict[int, int]:
    return {int(d): int(totient(d)) for d in divisors(n)}


def dihedral_fingerprint(n: int) -> GroupFingerprint:
    """Dihedral group of order 2n, n >= 3: the rotations plus n reflections."""
    hist = _cyclic_histogram(n)
    hist[2] = hist.get(2, 0) + n
    even = n % 2 == 0
    return _fp(
        2 * n,
        hist,
        abelian=False,
        center=2 if even else 1,
        derived=n // 2 if even else n,
    )


@lru_cache(maxsize=None)
def reference_fingerprints(max_dihedral_order: Optional[int] = None) -> Dict[str, GroupFingerprint]:
    """Label -> fingerprint for every non-cyclic type the classifier knows."""
    top = ENGINE.dihedral_max_order if max_dihedral_order is None else int(max_dihedral_order)
    table: Dict[str, GroupFingerprint] = {
        "V4": _fp(4, {1: 1, 2: 3}, abelian=True, center=4, derived=1),
        "C4xC2": _fp(8, {1: 1, 2: 3, 4: 4}, abelian=True, center=8, derived=1),
        "C2xC2xC2": _fp(8, {1: 1, 2: 7}, abelian=True, center=8, derived=1),
        "Q8": _fp(8, {1: 1, 2: 1, 4: 6}, abelian=False, center=2, derived=2),
        "A4": _fp(12, {1: 1, 2: 3, 3: 8}, abelian=False, center=1, derived=4),
        "F20": _fp(20, {1: 1, 2: 5, 4: 10, 5: 4}, abelian=False, center=1, derived=5),
        "S4": _fp(24, {1: 1, 2: 9, 3: 8, 4: 6}, abelian=False, center=1, derived=12),
        "A5": _fp(60, {1: 1, 2: 15, 3: 20, 5: 24}, abelian=False, center=1, derived=60),
        "S5": _fp(120, {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}, abelian=False, center=1, derived=60),
    }
    for n in range(3, top // 2 + 1):
        table["S3" if n == 3 else f"D{2 * n}"] = dihedral_fingerprint(n)
    return table


@lru_cache(maxsize=None)
def _lookup() -> Dict[GroupFingerprint, str]:
    out: Dict[GroupFingerprint, str] = {}
    for label, fp in reference_fingerprints().items():
        if fp in out:
            raise RuntimeError(f"label table is ambiguous: {out[fp]} and {label} share a fingerprint")
        out[fp] = label
    return out


def classify(fp: GroupFingerprint) -> str:
    if fp.is_cyclic:
        return f"C{fp.order}"
    return _lookup().get(fp, f"unclassified(order={fp.order})")


_SYNONYMS = {
    "1": "C1",
    "E": "C1",
    "TRIVIAL": "C1",
    "A3": "C3",
    "D2": "C2",
    "D4": "V4",
    "C2XC2": "V4",
    "KLEIN": "V4",
    "D6": "S3",
    "S3XS2": "D12",
    "S3XC2": "D12",
    "C2XS3": "D12",
    "GA(1,5)": "F20",
    "AGL(1,5)": "F20",
    "C5:C4": "F20",
    "C2XC4": "C4xC2",
    "C2XC2XC2": "C2xC2xC2",
}


def canonical_label(name: str) -> str:
    """Resolve a published or conventional name to this module's label."""
    raw = (name or "").strip()
    key = raw.replace(" ", "").replace("×", "x").replace("_", "").upper()
    if key in _SYNONYMS:
        return _SYNONYMS[key]
    if key.startswith("D") and key[1:].isdigit():
        order = int(key[1:])
        return "S3" if order == 6 else f"D{order}"
    if key[:1] in ("C", "S", "A") and key[1:].isdigit():
        return key[0] + key[1:]
    return raw


# ---------------------------------------------------------------------------
# Lattice helpers
# ---------------------------------------------------------------------------

def label_node(lattice: SubgroupLattice, node: int) -> str:
    return classify(fingerprint(lattice.nodes[node]))


def label_census(lattice: SubgroupLattice, nodes: Iterable[int]) -> Dict[str, int]:
    counts = Counter(label_node(lattice, i) for i in nodes)
    return dict(sorted(counts.items()))


def intersection_profile(lattice: SubgroupLattice, max_rank: Optional[int] = None) -> Dict[int, Dict[str, int]]:
    """rank r -> label histogram of the nontrivial r-wise intersections of
    the top's maximal subgroups. Ranks with none are present and empty."""
    maxes = maximal_subgroups(lattice, lattice.top)
    k = len(maxes)
    max_rank = k if max_rank is None else min(int(max_rank), k)
    masks = [lattice.nodes[i].mask for i in maxes]
    trivial = lattice.nodes[lattice.bottom].mask

    labels: Dict[int, str] = {}
    profile: Dict[int, Counter] = {r: Counter() for r in range(1, max_rank + 1)}
    stack: List[Tuple[int, int, int]] = [(i + 1, masks[i], 1) for i in reversed(range(k))]
    while stack:
        nxt, mask, r = stack.pop()
        if mask == trivial or r > max_rank:
            continue
        if mask not in labels:
            labels[mask] = label_node(lattice, lattice.node_of(mask))
        profile[r][labels[mask]] += 1
        for j in reversed(range(nxt, k)):
            stack.append((j + 1, mask & masks[j], r + 1))

    log_debug(f"[iso] intersection profile over {k} maximal subgroups: {len(labels)} distinct intersections")
    return {r: dict(sorted(c.items())) for r, c in profile.items()}
