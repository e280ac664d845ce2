# commands/audit/compute.py
"""Recompute audit quantities. Nothing in here knows a published value."""

from __future__ import annotations

from collections import Counter
from functools import reduce
from typing import Any, Callable, Dict, List, Optional, Tuple

from chain_counter import (
    InclusionExclusionBreakdown,
    chains_ending_table,
    h_by_inclusion_exclusion,
    lower_bound_split,
    maximal_chains_table,
)
from commands.audit.catalog import CATALOG_VERSION, build_catalog
from commands.audit.models import AuditReport, Claim, entry_for
from commands.shared import named_lattice, symmetric_tables
from group_engine import SubgroupHandle, intersect, subgroup_from_permutations
from iso_classifier import intersection_profile, label_node
from lattice_builder import SubgroupLattice, maximal_subgroups
from permutations import parse_generator_list
from utils.logger import log_info, log_ok
from utils.settings import EngineConfig


class UnknownQuantityError(KeyError):
    pass


class Workbench:
    """Lazily builds and caches everything the catalog asks for."""

    def __init__(self, cfg: EngineConfig) -> None:
        self.cfg = cfg
        self._ie: Dict[str, InclusionExclusionBreakdown] = {}
        self._profiles: Dict[str, Dict[int, Dict[str, int]]] = {}

    def lattice(self, spec: str) -> SubgroupLattice:
        return named_lattice(spec, self.cfg)

    def _maximals_of_order(self, spec: str, order: int) -> Tuple[SubgroupLattice, List[int]]:
        lat = self.lattice(spec)
        return lat, [m for m in maximal_subgroups(lat, lat.top) if lat.order(m) == order]

    def _breakdown(self, spec: str) -> InclusionExclusionBreakdown:
        if spec not in self._ie:
            _, self._ie[spec] = h_by_inclusion_exclusion(self.lattice(spec), max_k=self.cfg.ie_max_maximals)
        return self._ie[spec]

    def _profile(self, spec: str) -> Dict[int, Dict[str, int]]:
        if spec not in self._profiles:
            self._profiles[spec] = intersection_profile(self.lattice(spec))
        return self._profiles[spec]

    # ---- quantities ----

    def g(self, spec: str) -> int:
        lat = self.lattice(spec)
        return maximal_chains_table(lat)[lat.top]

    def h(self, spec: str) -> int:
        lat = self.lattice(spec)
        return chains_ending_table(lat)[lat.top]

    def g_of_maximals(self, spec: str, order: str) -> Any:
        lat, nodes = self._maximals_of_order(spec, int(order))
        table = maximal_chains_table(lat)
        return _single_or_sorted(table[m] for m in nodes)

    def label_of_maximals(self, spec: str, order: str) -> Any:
        lat, nodes = self._maximals_of_order(spec, int(order))
        return _single_or_sorted(label_node(lat, m) for m in nodes)

    def maximal_count(self, spec: str) -> int:
        lat = self.lattice(spec)
        return len(maximal_subgroups(lat, lat.top))

    def maximal_orders(self, spec: str) -> Dict[str, int]:
        lat = self.lattice(spec)
        counts = Counter(lat.order(m) for m in maximal_subgroups(lat, lat.top))
        return {str(k): v for k, v in sorted(counts.items())}

    def maximal_labels(self, spec: str) -> Dict[str, int]:
        lat = self.lattice(spec)
        counts = Counter(label_node(lat, m) for m in maximal_subgroups(lat, lat.top))
        return dict(sorted(counts.items()))

    def rank_sum(self, spec: str, r: str) -> int:
        return self._breakdown(spec).c_r(int(r))

    def trivial_from(self, spec: str) -> Any:
        return self._breakdown(spec).trivial_from_rank

    def profile(self, spec: str, r: str) -> Dict[str, int]:
        return self._profile(spec).get(int(r), {})

    def _subgroup(self, spec: str, gens: str) -> SubgroupHandle:
        parent = self.lattice(spec).parent
        return subgroup_from_permutations(parent, parse_generator_list(gens, parent.degree))

    def _maximal_node(self, spec: str, gens: str) -> Optional[int]:
        lat = self.lattice(spec)
        node = lat.node_of(self._subgroup(spec, gens).mask)
        return node if node in maximal_subgroups(lat, lat.top) else None

    def maximal_order(self, spec: str, gens: str) -> Any:
        """Order of <gens> when it is a maximal subgroup, otherwise a description."""
        node = self._maximal_node(spec, gens)
        if node is None:
            return f"not maximal (order {self._subgroup(spec, gens).order})"
        return self.lattice(spec).order(node)

    def distinct_maximals(self, spec: str, listing: str) -> int:
        nodes = {self._maximal_node(spec, gens) for gens in listing.split("|")}
        nodes.discard(None)
        return len(nodes)

    def meet(self, spec: str, expr: str) -> str:
        members, _, expected = expr.partition("=")
        lat = self.lattice(spec)
        handles = [self._subgroup(spec, gens) for gens in members.split("|")]
        common = reduce(intersect, handles)
        label = label_node(lat, lat.node_of(common.mask))
        if expected and common.mask != self._subgroup(spec, expected).mask:
            return f"{label}, not <{expected}>"
        return label

    def bound_constant(self, n: str) -> int:
        h_alt, h_sym = symmetric_tables(int(n), self.cfg)
        constant, _ = lower_bound_split(int(n), h_alt, h_sym)
        return constant

    def evaluate(self, quantity: str) -> Any:
        kind, _, rest = quantity.partition(":")
        parts = rest.split(":") if rest else []
        handlers: Dict[Tuple[str, int], Callable[..., Any]] = {
            ("g", 1): self.g,
            ("h", 1): self.h,
            ("g", 3): lambda _max, spec, order: self.g_of_maximals(spec, order),
            ("label", 3): lambda _max, spec, order: self.label_of_maximals(spec, order),
            ("count", 2): lambda _max, spec: self.maximal_count(spec),
            ("census", 2): self._census,
            ("ie", 2): lambda _what, spec: self.trivial_from(spec),
            ("ie", 3): lambda _what, spec, r: self.rank_sum(spec, r),
            ("profile", 2): self.profile,
            ("bound", 2): lambda _what, n: self.bound_constant(n),
            ("maximal", 2): self.maximal_order,
            ("distinct-maximal", 2): self.distinct_maximals,
            ("meet", 2): self.meet,
        }
        fn = handlers.get((kind, len(parts)))
        if fn is None:
            raise UnknownQuantityError(quantity)
        return fn(*parts)

    def _census(self, what: str, spec: str) -> Dict[str, int]:
        if what == "max-order":
            return self.maximal_orders(spec)
        if what == "max-label":
            return self.maximal_labels(spec)
        raise UnknownQuantityError(f"census:{what}")


def _single_or_sorted(values) -> Any:
    vals = sorted(set(values))
    return vals[0] if len(vals) == 1 else vals


def run_audit(cfg: EngineConfig, claims: List[Claim] | None = None) -> AuditReport:
    bench = Workbench(cfg)
    claims = build_catalog() if claims is None else claims
    log_info(f"[audit] catalog {CATALOG_VERSION}: {len(claims)} claims")
    entries = tuple(entry_for(claim, bench.evaluate(claim.quantity)) for claim in claims)
    report = AuditReport(CATALOG_VERSION, entries)
    log_ok("[audit] " + ", ".join(f"{k}={v}" for k, v in report.summary.items()))
    return report
