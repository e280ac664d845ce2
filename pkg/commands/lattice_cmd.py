# commands/lattice_cmd.py
from __future__ import annotations

import argparse

from commands.shared import add_group_arguments, emit_csv, emit_json, emit_text, group_from_args, lattice_of
from lattice_store import lattice_document, write_lattice
from utils.settings import EngineConfig


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("lattice", help="enumerate the subgroup lattice and export it")
    add_group_arguments(p)
    p.add_argument("--output", "-o", help="write the JSON document here instead of stdout")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace, cfg: EngineConfig) -> int:
    lattice = lattice_of(group_from_args(args, cfg), cfg)

    if args.output:
        write_lattice(lattice, args.output)
        return 0

    doc = lattice_document(lattice)
    if args.format == "json":
        emit_json(doc)
    elif args.format == "csv":
        emit_csv(
            ["id", "order", "label", "generators", "maximal_subgroups"],
            [
                (n["id"], n["order"], n["label"], ";".join(n["generators"]), list(lattice.lower_covers[n["id"]]))
                for n in doc["nodes"]
            ],
        )
    else:
        lines = [
            f"{lattice.parent.label()}: {len(lattice)} subgroups, {len(doc['covers'])} covering pairs, "
            f"{len(doc['maximal_of_top'])} maximal"
        ]
        for n in doc["nodes"]:
            gens = " ".join(n["generators"]) or "()"
            lines.append(f"  #{n['id']:<4} order {n['order']:<4} {n['label']:<12} <{gens}>")
        emit_text(lines)
    return 0
