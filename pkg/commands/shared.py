# commands/shared.py
"""Helpers shared by the command modules: group arguments, lattice cache,
symmetric/alternating h tables, and stdout emitters."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from chain_counter import chains_ending_table, degenerate_tables
from group_engine import ElementTable
from lattice_builder import SubgroupLattice, enumerate_subgroups
from utils.console import cprint
from utils.group_spec import build_group
from utils.settings import EngineConfig

_LATTICES: Dict[Tuple[str, int], SubgroupLattice] = {}


def add_group_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("--group", "-g", help="S<n>, A<n>, C<n>, D<order> or trivial")
    p.add_argument("--degree", type=int, help="degree for --gens")
    p.add_argument("--gens", help='generators in cycle notation separated by ";", e.g. "(1,2);(1,2,3)"')


def group_from_args(args: argparse.Namespace, cfg: EngineConfig) -> ElementTable:
    return build_group(args.group, degree=args.degree, gens=args.gens, config=cfg)


def lattice_of(table: ElementTable, cfg: EngineConfig) -> SubgroupLattice:
    return enumerate_subgroups(table, cfg.lattice_cap, contains_threshold=cfg.contains_matrix_threshold)


def named_lattice(spec: str, cfg: EngineConfig) -> SubgroupLattice:
    """Lattice of a named group, built once per process and config."""
    key = (spec.strip().upper(), cfg.lattice_cap)
    if key not in _LATTICES:
        _LATTICES[key] = lattice_of(build_group(spec, config=cfg), cfg)
    return _LATTICES[key]


def symmetric_tables(n: int, cfg: EngineConfig) -> Tuple[Dict[int, int], Dict[int, int]]:
    """h(A_0..A_n) and h(S_0..S_{n-1}), degenerate indices by convention."""
    h_alt, h_sym = degenerate_tables()
    for k in range(4, n + 1):
        lat = named_lattice(f"A{k}", cfg)
        h_alt[k] = chains_ending_table(lat)[lat.top]
    for k in range(2, n):
        lat = named_lattice(f"S{k}", cfg)
        h_sym[k] = chains_ending_table(lat)[lat.top]
    return h_alt, h_sym


# ---------------- output ----------------

def emit_json(doc: Any) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def emit_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(list(header))
    for row in rows:
        w.writerow([json.dumps(v, sort_keys=True) if isinstance(v, (dict, list)) else v for v in row])


def emit_text(lines: List[str], color: Optional[str] = None) -> None:
    for line in lines:
        cprint(line, color)
