# group_engine.py
"""Explicit element tables for small permutation groups.

A group is closed once from its generators into an indexed element list
(identity at index 0, then breadth-first discovery order from the sorted
generators), with a full numpy multiplication table. Subgroups are Python int
bitmasks over those indices, so intersection is ``a & b`` and containment is
``a & b == a``.

Everything here targets groups of order <= 720; there is no stabilizer-chain
machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from permutations import (
    DegreeMismatchError,
    Permutation,
    from_cycles,
    format_permutation,
    identity,
    order_of,
)
from utils.logger import log_debug
from utils.settings import ENGINE, EngineConfig


class GroupEngineError(RuntimeError):
    """Raised when a group or subgroup cannot be built as requested."""


class ClosureCapExceeded(GroupEngineError):
    pass


class ParentMismatchError(GroupEngineError):
    pass


class FamilyParameterError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bitmask helpers
# ---------------------------------------------------------------------------

def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


# ---------------------------------------------------------------------------
# Element table
# ---------------------------------------------------------------------------

class ElementTable:
    """A fully closed group. Immutable after construction."""

    def __init__(
        self,
        degree: int,
        elements: Sequence[Permutation],
        generators: Sequence[Permutation],
        name: str = "",
    ) -> None:
        self.degree = int(degree)
        self.elements: Tuple[Permutation, ...] = tuple(elements)
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.name = name
        self._index: Dict[Permutation, int] = {p: i for i, p in enumerate(self.elements)}

        self.mul = _multiplication_table(self.elements)
        self.mul.flags.writeable = False
        # row i holds mul[i, j] == index of compose(e_i, e_j); plain lists are
        # much faster than numpy scalars inside the closure loops
        self._rows: List[List[int]] = self.mul.tolist()

        inv = np.argmax(self.mul == 0, axis=1).astype(np.int64)
        inv.flags.writeable = False
        self.inv = inv

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rows(self) -> List[List[int]]:
        return self._rows

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise GroupEngineError(f"{format_permutation(p)} is not an element of {self.label()}") from None

    def product(self, i: int, j: int) -> int:
        return self._rows[i][j]

    @cached_property
    def element_orders(self) -> Tuple[int, ...]:
        return tuple(order_of(p) for p in self.elements)

    def label(self) -> str:
        return self.name or f"<{', '.join(format_permutation(g) for g in self.generators)}>"

    def __repr__(self) -> str:
        return f"ElementTable({self.label()}, degree={self.degree}, order={self.order})"


def _multiplication_table(elements: Sequence[Permutation]) -> np.ndarray:
    n = len(elements)
    arr = np.array([p.images for p in elements], dtype=np.int32) - 1
    lookup = {arr[j].tobytes(): j for j in range(n)}
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        # compose(e_i, e_j)(k) = e_i(e_j(k)), so row j of arr[i][arr]
        prod = arr[i][arr]
        table[i] = [lookup[row.tobytes()] for row in prod]
    return table


def close_generators(
    gens: Iterable[Permutation],
    cap: Optional[int] = None,
    *,
    degree: Optional[int] = None,
    name: str = "",
) -> ElementTable:
    """Close ``gens`` under composition.

    Generators are sorted first, so any ordering of the same set yields the
    same element indexing. Breadth-first from the identity, each new element
    e spawns compose(g, e) for every generator g in sorted order.
    """
    cap = ENGINE.closure_cap if cap is None else int(cap)
    gens = list(gens)
    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(int(degree))
    if not degrees:
        raise GroupEngineError("need at least one generator or an explicit degree")
    if len(degrees) > 1:
        raise DegreeMismatchError(f"generators have mixed degrees {sorted(degrees)}")
    n = degrees.pop()

    gens = sorted({g for g in gens if not g.is_identity()})
    e = identity(n)
    elements: List[Tuple[int, ...]] = [e.images]
    seen = {e.images: 0}
    gen_images = [g.images for g in gens]

    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for gi in gen_images:
            nxt = tuple(gi[j - 1] for j in cur)
            if nxt not in seen:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(
                        f"closure of {len(gens)} generators on {n} points exceeds cap {cap}"
                    )
                seen[nxt] = len(elements)
                elements.append(nxt)

    table = ElementTable(n, [Permutation(t) for t in elements], gens, name=name)
    log_debug(f"[group] closed {table.label()}: order {table.order}")
    return table


# ---------------------------------------------------------------------------
# Subgroups as bitmasks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupHandle:
    parent: ElementTable = field(repr=False)
    mask: int

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool((self.mask >> int(index)) & 1)

    def indices(self) -> List[int]:
        return list(bits(self.mask))

    def elements(self) -> List[Permutation]:
        return [self.parent.elements[i] for i in bits(self.mask)]

    def is_subgroup_of(self, other: "SubgroupHandle") -> bool:
        _same_parent(self, other)
        return self.mask & other.mask == self.mask


def _same_parent(a: SubgroupHandle, b: SubgroupHandle) -> None:
    if a.parent is not b.parent:
        raise ParentMismatchError("subgroups live in different element tables")


def closure_mask(parent: ElementTable, gen_indices: Iterable[int], start_mask: int = 1) -> int:
    """Smallest closed mask containing ``start_mask`` and the generators.

    ``start_mask`` must contain the identity and lie inside <gen_indices>;
    it only saves revisiting elements already known to be in the span.
    """
    rows = parent.rows
    gens = [rows[int(g)] for g in gen_indices]
    mask = start_mask
    frontier = list(bits(start_mask))
    while frontier:
        nxt: List[int] = []
        for x in frontier:
            for row in gens:
                z = row[x]
                if not (mask >> z) & 1:
                    mask |= 1 << z
                    nxt.append(z)
        frontier = nxt
    return mask


def subgroup_from_generators(parent: ElementTable, gens: Iterable[int]) -> SubgroupHandle:
    gens = [int(g) for g in gens]
    for g in gens:
        if not 0 <= g < parent.order:
            raise GroupEngineError(f"element index {g} outside 0..{parent.order - 1}")
    return SubgroupHandle(parent, closure_mask(parent, gens))


def subgroup_from_permutations(parent: ElementTable, gens: Iterable[Permutation]) -> SubgroupHandle:
    return subgroup_from_generators(parent, [parent.index(p) for p in gens])


def trivial_subgroup(parent: ElementTable) -> SubgroupHandle:
    return SubgroupHandle(parent, 1)


def whole_group(parent: ElementTable) -> SubgroupHandle:
    return SubgroupHandle(parent, parent.full_mask)


def intersect(a: SubgroupHandle, b: SubgroupHandle) -> SubgroupHandle:
    _same_parent(a, b)
    return SubgroupHandle(a.parent, a.mask & b.mask)


def conjugate(h: SubgroupHandle, g: int) -> SubgroupHandle:
    """{g x g^-1 : x in h}."""
    parent = h.parent
    rows = parent.rows
    g = int(g)
    g_inv = int(parent.inv[g])
    row_g = rows[g]
    m = 0
    for x in bits(h.mask):
        m |= 1 << rows[row_g[x]][g_inv]
    return SubgroupHandle(parent, m)


def is_closed_mask(parent: ElementTable, mask: int) -> bool:
    """Exhaustive check: identity, products and inverses all stay inside."""
    if not mask & 1:
        return False
    idx = list(bits(mask))
    rows = parent.rows
    for i in idx:
        row = rows[i]
        for j in idx:
            if not (mask >> row[j]) & 1:
                return False
        if not (mask >> int(parent.inv[i])) & 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

class GroupFamily(str, Enum):
    SYMMETRIC = "symmetric"
    ALTERNATING = "alternating"
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"


def _n_cycle(n: int, degree: int) -> Permutation:
    return from_cycles([list(range(1, n + 1))], degree)


def family_generators(family: GroupFamily, n: int) -> Tuple[int, List[Permutation]]:
    """(degree, generators) for a family member; ``n`` is the ORDER for dihedral."""
    if family is GroupFamily.SYMMETRIC:
        if n <= 1:
            return 1, []
        return n, [from_cycles([[1, 2]], n), _n_cycle(n, n)]

    if family is GroupFamily.ALTERNATING:
        if n <= 2:
            return max(n, 1), []
        return n, [from_cycles([[1, 2, k]], n) for k in range(3, n + 1)]

    if family is GroupFamily.CYCLIC:
        return n, [_n_cycle(n, n)] if n > 1 else []

    # dihedral of order n (= 2m)
    m = n // 2
    if m == 1:
        return 2, [from_cycles([[1, 2]], 2)]
    if m == 2:
        # Klein four-group; no faithful action on 2 points
        return 4, [from_cycles([[1, 2], [3, 4]], 4), from_cycles([[1, 3], [2, 4]], 4)]
    reflection = [[i, m + 2 - i] for i in range(2, m // 2 + 2) if i < m + 2 - i]
    return m, [_n_cycle(m, m), from_cycles(reflection, m)]


def named_group(family: GroupFamily | str, n: int, *, config: Optional[EngineConfig] = None) -> ElementTable:
    """S_n, A_n, C_n or D_n where the dihedral parameter is the group ORDER."""
    cfg = config or ENGINE
    family = GroupFamily(family)
    n = int(n)
    if n < 1:
        raise FamilyParameterError(f"{family.value} parameter must be >= 1, got {n}")

    if family in (GroupFamily.SYMMETRIC, GroupFamily.ALTERNATING):
        if n > cfg.symmetric_max_degree:
            raise FamilyParameterError(f"{family.value} degree {n} exceeds cap {cfg.symmetric_max_degree}")
        name = ("S" if family is GroupFamily.SYMMETRIC else "A") + str(n)
    elif family is GroupFamily.CYCLIC:
        if n > cfg.cyclic_max_order:
            raise FamilyParameterError(f"cyclic order {n} exceeds cap {cfg.cyclic_max_order}")
        name = f"C{n}"
    else:
        if n % 2:
            raise FamilyParameterError(f"dihedral order must be even, got {n}")
        if n > cfg.dihedral_max_order:
            raise FamilyParameterError(f"dihedral order {n} exceeds cap {cfg.dihedral_max_order}")
        name = f"D{n}"

    degree, gens = family_generators(family, n)
    return close_generators(gens, cfg.closure_cap, degree=degree, name=name)

