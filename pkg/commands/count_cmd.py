# commands/count_cmd.py
"""`count`: g(G) and h(G) for one group, by one method or all of them."""

from __future__ import annotations

import argparse
from typing import Dict, List, Optional, Tuple

from chain_counter import (
    compare_methods,
    count_chains,
    h_by_inclusion_exclusion,
    maximal_chain_decomposition,
    naive_chain_oracle,
)
from commands.shared import add_group_arguments, emit_csv, emit_json, emit_text, group_from_args, lattice_of
from utils.console import c, color_enabled
from utils.settings import EngineConfig

METHODS = ("dp", "ie", "naive", "all")

EXIT_DISAGREEMENT = 3


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("count", help="count maximal chains g(G) and chains ending in G h(G)")
    add_group_arguments(p)
    p.add_argument("--method", choices=METHODS, default="dp")
    p.set_defaults(handler=run)


def _ie_values(lattice) -> Tuple[int, int]:
    h, _ = h_by_inclusion_exclusion(lattice)
    decomposition = maximal_chain_decomposition(lattice)
    # trivial group: no maximal subgroups, one chain
    g = sum(decomposition.values()) if decomposition else 1
    return g, h


def run(args: argparse.Namespace, cfg: EngineConfig) -> int:
    table = group_from_args(args, cfg)
    lattice = lattice_of(table, cfg)

    per_method: Dict[str, Tuple[int, int]] = {}
    agree: Optional[bool] = None
    problems: List[str] = []

    if args.method == "dp":
        counts = count_chains(lattice)
        per_method["dp"] = (counts.g, counts.h)
    elif args.method == "ie":
        per_method["ie"] = _ie_values(lattice)
    elif args.method == "naive":
        per_method["naive"] = naive_chain_oracle(lattice, budget=cfg.oracle_budget)
    else:
        results = compare_methods(lattice, ("dp", "ie", "naive"), budget=cfg.oracle_budget, strict=False)
        per_method["dp"] = (results.dp.g, results.dp.h)
        per_method["ie"] = (results.decomposition_g if len(lattice) > 1 else 1, results.ie_h)
        per_method["naive"] = results.naive
        problems = results.disagreements()
        agree = not problems

    g, h = next(iter(per_method.values()))
    name = table.label()

    if args.format == "json":
        doc = {
            "group": name,
            "order": table.order,
            "subgroups": len(lattice),
            "g": g,
            "h": h,
            "methods": {m: {"g": mg, "h": mh} for m, (mg, mh) in per_method.items()},
        }
        if agree is not None:
            doc["agreement"] = agree
            doc["disagreements"] = problems
        emit_json(doc)
    elif args.format == "csv":
        emit_csv(["group", "method", "g", "h"], [(name, m, mg, mh) for m, (mg, mh) in per_method.items()])
    else:
        lines = [f"{name}  order={table.order}  subgroups={len(lattice)}"]
        for m, (mg, mh) in per_method.items():
            lines.append(f"  {m:<6} g={mg}  h={mh}")
        if agree is not None:
            colored = color_enabled()
            verdict = c("agreement OK", "green", bold=True, enabled=colored) if agree else c(
                "DISAGREEMENT: " + "; ".join(problems), "red", bold=True, enabled=colored
            )
            lines.append(f"  {verdict}")
        emit_text(lines)

    return EXIT_DISAGREEMENT if agree is False else 0
