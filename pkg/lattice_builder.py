# lattice_builder.py
"""Subgroup lattices by join-closure.

Nodes are seeded with every cyclic subgroup <x>, then each node H is joined
with every cyclic generator c (H v <c> = <H, c>) until no new mask appears.
Every subgroup <x1, ..., xt> is reached through the chain <x1>, <x1, x2>, ...
so the fixpoint is the whole lattice; tests still check that against the
exhaustive subset search below.

Node ids are positions in the list sorted by (order, mask), which makes them
stable across runs and across seed orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from group_engine import (
    ElementTable,
    SubgroupHandle,
    bits,
    closure_mask,
)
from utils.logger import log_debug, log_ok
from utils.settings import ENGINE


class LatticeCapExceeded(RuntimeError):
    pass


class LatticeInvariantError(RuntimeError):
    """A structural guarantee of the lattice did not hold."""


@dataclass(frozen=True)
class SubgroupLattice:
    parent: ElementTable
    nodes: Tuple[SubgroupHandle, ...]
    generators: Tuple[Tuple[int, ...], ...]
    below: Tuple[int, ...]          # node-index bitset of strict subgroups
    above: Tuple[int, ...]          # node-index bitset of strict overgroups
    covers: Tuple[Tuple[int, int], ...]        # (child, parent)
    lower_covers: Tuple[Tuple[int, ...], ...]  # maximal subgroups of each node
    index_of_mask: Dict[int, int]
    contains_threshold: int = 256

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def __len__(self) -> int:
        return len(self.nodes)

    def order(self, node: int) -> int:
        return self.nodes[node].order

    def contains(self, small: int, big: int) -> bool:
        """small <= big as subgroups."""
        if small == big:
            return True
        if len(self.nodes) <= self.contains_threshold:
            a, b = self.nodes[small].mask, self.nodes[big].mask
            return a & b == a
        return bool((self.below[big] >> small) & 1)

    def node_of(self, mask: int) -> int:
        try:
            return self.index_of_mask[mask]
        except KeyError:
            raise LatticeInvariantError(f"mask {mask:#x} is not a subgroup in this lattice") from None

    def strict_subgroups(self, node: int) -> List[int]:
        return list(bits(self.below[node]))


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

def node_generators(parent: ElementTable, mask: int) -> Tuple[int, ...]:
    """Greedy generating set: walk the elements in index order, keep any
    element not already in the span of those kept."""
    gens: List[int] = []
    span = 1
    for x in bits(mask):
        if (span >> x) & 1:
            continue
        gens.append(x)
        span = closure_mask(parent, gens, start_mask=span)
        if span == mask:
            break
    return tuple(gens)


def assemble_lattice(
    parent: ElementTable,
    masks: Iterable[int],
    *,
    contains_threshold: Optional[int] = None,
) -> SubgroupLattice:
    """Build the order structure for a known set of subgroup masks."""
    threshold = ENGINE.contains_matrix_threshold if contains_threshold is None else int(contains_threshold)
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    if not ordered or ordered[0] != 1 or ordered[-1] != parent.full_mask:
        raise LatticeInvariantError("node set must contain the trivial subgroup and the whole group")

    n = len(ordered)
    sizes = [m.bit_count() for m in ordered]
    below = [0] * n
    above = [0] * n
    for j in range(n):
        mj, sj = ordered[j], sizes[j]
        for i in range(j):
            # a proper subgroup has strictly smaller, dividing order
            if sizes[i] < sj and sj % sizes[i] == 0 and ordered[i] & mj == ordered[i]:
                below[j] |= 1 << i
                above[i] |= 1 << j

    covers: List[Tuple[int, int]] = []
    lower: List[Tuple[int, ...]] = []
    for y in range(n):
        mine = []
        for x in bits(below[y]):
            # nothing strictly between x and y
            if below[y] & above[x] == 0:
                mine.append(x)
                covers.append((x, y))
        lower.append(tuple(mine))

    lattice = SubgroupLattice(
        parent=parent,
        nodes=tuple(SubgroupHandle(parent, m) for m in ordered),
        generators=tuple(node_generators(parent, m) for m in ordered),
        below=tuple(below),
        above=tuple(above),
        covers=tuple(sorted(covers)),
        lower_covers=tuple(lower),
        index_of_mask={m: i for i, m in enumerate(ordered)},
        contains_threshold=threshold,
    )
    return lattice


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _join_closure_masks(parent: ElementTable, seed_order: str) -> List[int]:
    order = list(range(parent.order))
    if seed_order == "reverse":
        order.reverse()
    elif seed_order != "forward":
        raise ValueError(f"seed_order must be 'forward' or 'reverse', got {seed_order!r}")

    gens_of: Dict[int, Tuple[int, ...]] = {}
    cyclic: List[Tuple[int, int]] = []      # (representative element, mask)
    for x in order:
        m = closure_mask(parent, [x])
        if m not in gens_of:
            gens_of[m] = (x,)
            cyclic.append((x, m))

    worklist = [m for _, m in cyclic]
    while worklist:
        h = worklist.pop()
        h_gens = gens_of[h]
        for x, cm in cyclic:
            if cm & h == cm:
                continue
            j = closure_mask(parent, h_gens + (x,))
            if j not in gens_of:
                gens_of[j] = h_gens + (x,)
                worklist.append(j)

    return list(gens_of)


def enumerate_subgroups(
    parent: ElementTable,
    cap: Optional[int] = None,
    *,
    seed_order: str = "forward",
    contains_threshold: Optional[int] = None,
) -> SubgroupLattice:
    cap = ENGINE.lattice_cap if cap is None else int(cap)
    if parent.order > cap:
        raise LatticeCapExceeded(f"group order {parent.order} exceeds lattice cap {cap}")

    masks = _join_closure_masks(parent, seed_order)
    lattice = assemble_lattice(parent, masks, contains_threshold=contains_threshold)
    log_ok(f"[lattice] {parent.label()}: {len(lattice)} subgroups, {len(lattice.covers)} covering pairs")
    return lattice


def maximal_subgroups(lattice: SubgroupLattice, node: int) -> List[int]:
    return list(lattice.lower_covers[node])


def covering_relation(lattice: SubgroupLattice) -> List[Tuple[int, int]]:
    return list(lattice.covers)


# ---------------------------------------------------------------------------
# Exhaustive oracle
# ---------------------------------------------------------------------------

def subgroups_by_subset_search(parent: ElementTable) -> List[int]:
    """Every closed subset, by deciding each element in or out.

    Including element i forces its inverse and its products with everything
    already included; a forced element that was already excluded kills the
    branch, and so does any branch that has excluded something while holding
    more than half the group (Lagrange). Nothing else is pruned, so the
    result is every subgroup, found without the join-closure argument.
    """
    n = parent.order
    rows = parent.rows
    inv = [int(v) for v in parent.inv]
    half = n // 2
    found: List[int] = []

    # (position, chosen, forced, excluded_any)
    stack: List[Tuple[int, int, int, bool]] = [(1, 1, 0, False)]
    while stack:
        pos, chosen, forced, excluded_any = stack.pop()
        if (chosen | forced).bit_count() > half and excluded_any:
            continue
        if pos == n:
            found.append(chosen)
            continue

        bit = 1 << pos
        if not forced & bit:
            stack.append((pos + 1, chosen, forced, True))

        new_chosen = chosen | bit
        new_forced = forced | (1 << inv[pos])
        ok = True
        row = rows[pos]
        for y in bits(new_chosen):
            new_forced |= (1 << row[y]) | (1 << rows[y][pos])
        # anything forced at or before pos must already be chosen
        decided = (1 << (pos + 1)) - 1
        if new_forced & decided & ~new_chosen:
            ok = False
        if ok:
            stack.append((pos + 1, new_chosen, new_forced & ~new_chosen, excluded_any))

    log_debug(f"[lattice] subset search on {parent.label()}: {len(found)} closed subsets")
    return sorted(found, key=lambda m: (m.bit_count(), m))
