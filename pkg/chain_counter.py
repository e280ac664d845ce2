# chain_counter.py
"""g(G) and h(G) by several independent routes.

  g(G)  number of maximal chains  {e} = H0 < H1 < ... < Hk = G
  h(G)  number of chains of subgroups whose largest member is G
        (equivalently: distinct fuzzy subgroups of G up to level-set
        equivalence)

Routes:
  - lattice DP over containment (h) and covers (g)
  - recursion through maximal subgroups: g(G) = sum g(M), and
    inclusion-exclusion over intersections of maximal subgroups for h
  - closed forms for cyclic g and dihedral h at prime powers
  - a naive enumerator with no memoisation, for cross-checking

All counts are Python ints. h(trivial) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from sympy import factorint, isprime

from group_engine import bits
from lattice_builder import SubgroupLattice, maximal_subgroups
from utils.logger import log_debug, log_info, log_warn
from utils.settings import ENGINE


class OracleBudgetExceeded(RuntimeError):
    pass


class InclusionExclusionBoundError(RuntimeError):
    pass


class InvalidFactorizationError(ValueError):
    pass


class MissingTableEntryError(KeyError):
    pass


class MethodDisagreement(RuntimeError):
    """Two counting routes gave different answers. Always a bug."""


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainCounts:
    g: int
    h: int
    per_node_g: Tuple[int, ...] = field(default=(), repr=False)
    per_node_h: Tuple[int, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class InclusionExclusionBreakdown:
    k: int
    c: Tuple[int, ...]                  # c[0] is c_1
    total: int
    trivial_from_rank: Optional[int]    # every r-wise intersection trivial for r >= this
    intersections_evaluated: int
    subsets_by_binomial: int

    def c_r(self, r: int) -> int:
        return self.c[r - 1]


@dataclass(frozen=True)
class FactoredInteger:
    n: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidFactorizationError(f"n must be >= 1, got {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise InvalidFactorizationError("primes must be distinct and ascending")
        prod = 1
        for p, m in self.factors:
            if not isprime(p):
                raise InvalidFactorizationError(f"{p} is not prime")
            if m < 1:
                raise InvalidFactorizationError(f"exponent of {p} must be >= 1")
            prod *= p ** m
        if prod != self.n:
            raise InvalidFactorizationError(f"factors multiply to {prod}, not {self.n}")

    @classmethod
    def of(cls, n: int) -> "FactoredInteger":
        n = int(n)
        if n < 1:
            raise InvalidFactorizationError(f"n must be >= 1, got {n}")
        return cls(n, tuple(sorted(factorint(n).items())))

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.factors)


# ---------------------------------------------------------------------------
# Lattice DP
# ---------------------------------------------------------------------------

def chains_ending_table(lattice: SubgroupLattice) -> Tuple[int, ...]:
    """c(H) = 1 + sum of c(K) over proper subgroups K of H, for every node."""
    c: List[int] = []
    for i in range(len(lattice)):
        c.append(1 + sum(c[j] for j in bits(lattice.below[i])))
    return tuple(c)


def maximal_chains_table(lattice: SubgroupLattice) -> Tuple[int, ...]:
    """m(bottom) = 1, m(H) = sum of m(K) over K covered by H."""
    m: List[int] = []
    for i in range(len(lattice)):
        lower = lattice.lower_covers[i]
        m.append(1 if not lower else sum(m[j] for j in lower))
    return tuple(m)


def count_chains_ending(lattice: SubgroupLattice, node: Optional[int] = None) -> int:
    node = lattice.top if node is None else int(node)
    return chains_ending_table(lattice)[node]


def count_maximal_chains(lattice: SubgroupLattice, node: Optional[int] = None) -> int:
    node = lattice.top if node is None else int(node)
    return maximal_chains_table(lattice)[node]


def maximal_chain_decomposition(lattice: SubgroupLattice, node: Optional[int] = None) -> Dict[int, int]:
    """Maximal subgroup -> number of maximal chains through it; sums to g(node)."""
    node = lattice.top if node is None else int(node)
    table = maximal_chains_table(lattice)
    return {mx: table[mx] for mx in maximal_subgroups(lattice, node)}


def count_chains(lattice: SubgroupLattice, node: Optional[int] = None) -> ChainCounts:
    node = lattice.top if node is None else int(node)
    g_table = maximal_chains_table(lattice)
    h_table = chains_ending_table(lattice)
    return ChainCounts(g=g_table[node], h=h_table[node], per_node_g=g_table, per_node_h=h_table)


# ---------------------------------------------------------------------------
# Inclusion-exclusion over maximal subgroups
# ---------------------------------------------------------------------------

def h_by_inclusion_exclusion(
    lattice: SubgroupLattice,
    *,
    max_k: Optional[int] = None,
) -> Tuple[int, InclusionExclusionBreakdown]:
    """h(G) = 2 * sum over r of c_r, with
    c_r = (-1)^(r-1) * sum of h(M_i1 & ... & M_ir) over r-subsets.

    Subsets are walked depth first in index order. The first time a running
    intersection hits the trivial subgroup, every extension of that branch is
    trivial too, so the branch is settled with binomial terms instead of
    being walked. The h value of each intersection comes from the lattice DP
    on that node, memoised by mask.
    """
    max_k = ENGINE.ie_max_maximals if max_k is None else int(max_k)
    maxes = maximal_subgroups(lattice, lattice.top)
    k = len(maxes)
    if k > max_k:
        raise InclusionExclusionBoundError(f"{k} maximal subgroups exceeds the bound {max_k}")

    if k == 0:
        # trivial group: the single chain {e}; the union over no sets is empty
        return 1, InclusionExclusionBreakdown(0, (), 0, None, 0, 0)

    h_table = chains_ending_table(lattice)
    trivial_mask = lattice.nodes[lattice.bottom].mask
    h_trivial = h_table[lattice.bottom]
    masks = [lattice.nodes[i].mask for i in maxes]

    memo: Dict[int, int] = {}

    def h_of(mask: int) -> int:
        if mask not in memo:
            # every intersection of subgroups is a subgroup, hence a node
            memo[mask] = h_table[lattice.node_of(mask)]
        return memo[mask]

    c = [0] * (k + 1)
    deepest_nontrivial = 0
    by_binomial = 0
    stack: List[Tuple[int, int, int]] = [(i + 1, masks[i], 1) for i in reversed(range(k))]
    while stack:
        nxt, mask, r = stack.pop()
        if mask == trivial_mask:
            rest = k - nxt
            for t in range(rest + 1):
                ways = math.comb(rest, t)
                c[r + t] += (-1) ** (r + t - 1) * ways * h_trivial
                by_binomial += ways
            continue
        deepest_nontrivial = max(deepest_nontrivial, r)
        c[r] += (-1) ** (r - 1) * h_of(mask)
        for j in reversed(range(nxt, k)):
            stack.append((j + 1, mask & masks[j], r + 1))

    trivial_from = deepest_nontrivial + 1 if deepest_nontrivial < k else None
    ranks = tuple(c[1:])
    total = 2 * sum(ranks)
    log_debug(
        f"[ie] k={k}: {len(memo)} distinct intersections, {by_binomial} subsets settled by binomials, "
        f"trivial from rank {trivial_from}"
    )
    breakdown = InclusionExclusionBreakdown(
        k=k,
        c=ranks,
        total=total,
        trivial_from_rank=trivial_from,
        intersections_evaluated=len(memo),
        subsets_by_binomial=by_binomial,
    )
    return total, breakdown


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def g_cyclic_multinomial(n: FactoredInteger) -> int:
    """(m1 + ... + ms)! / (m1! ... ms!) for n = p1^m1 ... ps^ms."""
    if not isinstance(n, FactoredInteger):
        raise InvalidFactorizationError("expected a FactoredInteger")
    exps = n.exponents
    out = math.factorial(sum(exps))
    for m in exps:
        out //= math.factorial(m)
    return out


def h_dihedral_prime_power(p: int, m: int, *, max_order: Optional[int] = None) -> int:
    """h of the dihedral group of order 2 p^m:
    2^m (p^(m+1) + p - 2) / (p - 1)."""
    max_order = ENGINE.dihedral_max_order if max_order is None else int(max_order)
    p, m = int(p), int(m)
    if not isprime(p):
        raise InvalidFactorizationError(f"{p} is not prime")
    if m < 1:
        raise InvalidFactorizationError(f"exponent must be >= 1, got {m}")
    if 2 * p ** m > max_order:
        raise InvalidFactorizationError(f"order {2 * p ** m} exceeds dihedral cap {max_order}")
    num = 2 ** m * (p ** (m + 1) + p - 2)
    q, rem = divmod(num, p - 1)
    # p^(m+1) + p - 2 = 0 (mod p - 1), so this never trips
    assert rem == 0
    return q


# ---------------------------------------------------------------------------
# Naive oracle
# ---------------------------------------------------------------------------

def naive_chain_oracle(
    lattice: SubgroupLattice,
    *,
    budget: Optional[int] = None,
    max_nodes: Optional[int] = None,
) -> Tuple[int, int]:
    """(g, h) by listing every chain explicitly.

    h: every strictly decreasing tuple (G, H1, H2, ...) of subgroups.
    g: every path from the top to the bottom along covers.

    ``max_nodes`` only matters when set explicitly; the chain budget is the
    real guard.
    """
    budget = ENGINE.oracle_budget if budget is None else int(budget)
    if max_nodes is not None and len(lattice) > int(max_nodes):
        raise OracleBudgetExceeded(f"{len(lattice)} nodes exceeds oracle node bound {max_nodes}")

    top, bottom = lattice.top, lattice.bottom
    spent = 0

    h = 0
    stack: List[Tuple[int, ...]] = [(top,)]
    while stack:
        chain = stack.pop()
        h += 1
        spent += 1
        if spent > budget:
            raise OracleBudgetExceeded(f"more than {budget} chains enumerated")
        for k in bits(lattice.below[chain[-1]]):
            stack.append(chain + (k,))

    g = 0
    paths: List[Tuple[int, ...]] = [(top,)]
    while paths:
        path = paths.pop()
        spent += 1
        if spent > budget:
            raise OracleBudgetExceeded(f"more than {budget} chains enumerated")
        last = path[-1]
        if last == bottom:
            g += 1
            continue
        for k in lattice.lower_covers[last]:
            paths.append(path + (k,))

    return g, h


# ---------------------------------------------------------------------------
# Symmetric-group lower bound
# ---------------------------------------------------------------------------

def degenerate_tables() -> Tuple[Dict[int, int], Dict[int, int]]:
    """Low-index entries: S0, S1, A0, A1, A2 are trivial (h = 1); A3 = C3 (h = 2)."""
    return {0: 1, 1: 1, 2: 1, 3: 2}, {0: 1, 1: 1}


def _entry(table: Mapping[int, int], key: int, name: str) -> int:
    try:
        return int(table[key])
    except KeyError:
        raise MissingTableEntryError(f"h({name}{key}) missing from table") from None


def lower_bound_split(
    n: int,
    h_alternating: Mapping[int, int],
    h_symmetric: Mapping[int, int],
) -> Tuple[int, int]:
    """(constant, coefficient) with bound = constant + coefficient * h(A_n)."""
    n = int(n)
    if n < 5:
        raise ValueError(f"the bound is stated for n >= 5, got {n}")
    alt = sum(
        (-1) ** r * math.comb(n, r) * _entry(h_alternating, n - r, "A")
        for r in range(1, n + 1)
    )
    sym = sum(
        math.comb(n, r + 1) * _entry(h_symmetric, n - r - 1, "S")
        for r in range(n)
    )
    return 2 * (alt + sym), 2


def lower_bound_h_sn(
    n: int,
    h_alternating: Mapping[int, int],
    h_symmetric: Mapping[int, int],
) -> int:
    """2 (sum_{r=0}^{n} (-1)^r C(n,r) h(A_{n-r}) + sum_{r=0}^{n-1} C(n,r+1) h(S_{n-r-1}))."""
    constant, coeff = lower_bound_split(n, h_alternating, h_symmetric)
    return constant + coeff * _entry(h_alternating, int(n), "A")


# ---------------------------------------------------------------------------
# Cross-checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MethodResults:
    dp: ChainCounts
    ie_h: Optional[int] = None
    ie_breakdown: Optional[InclusionExclusionBreakdown] = None
    naive: Optional[Tuple[int, int]] = None
    decomposition_g: Optional[int] = None

    def disagreements(self) -> List[str]:
        out: List[str] = []
        if self.ie_h is not None and self.ie_h != self.dp.h:
            out.append(f"h: dp={self.dp.h} ie={self.ie_h}")
        if self.naive is not None:
            g, h = self.naive
            if g != self.dp.g:
                out.append(f"g: dp={self.dp.g} naive={g}")
            if h != self.dp.h:
                out.append(f"h: dp={self.dp.h} naive={h}")
        if self.decomposition_g is not None and len(self.dp.per_node_g) > 1 and self.decomposition_g != self.dp.g:
            out.append(f"g: dp={self.dp.g} sum-over-maximals={self.decomposition_g}")
        return out


def compare_methods(
    lattice: SubgroupLattice,
    methods: Tuple[str, ...] = ("dp", "ie", "naive"),
    *,
    budget: Optional[int] = None,
    strict: bool = True,
) -> MethodResults:
    """Run the requested routes; DP always runs since it is the reference."""
    dp = count_chains(lattice)
    ie_h = breakdown = naive = None
    if "ie" in methods:
        ie_h, breakdown = h_by_inclusion_exclusion(lattice)
    if "naive" in methods:
        naive = naive_chain_oracle(lattice, budget=budget)
    decomposition = sum(maximal_chain_decomposition(lattice).values())

    results = MethodResults(dp=dp, ie_h=ie_h, ie_breakdown=breakdown, naive=naive, decomposition_g=decomposition)
    problems = results.disagreements()
    if problems:
        if strict:
            raise MethodDisagreement("; ".join(problems))
        log_warn(f"[chains] {lattice.parent.label()}: " + "; ".join(problems))
    else:
        log_info(f"[chains] {lattice.parent.label()}: g={dp.g} h={dp.h} ({', '.join(methods)} agree)")
    return results
