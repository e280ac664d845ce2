# commands/audit_cmd.py
"""`audit`: recompute every cataloged published value and report
MATCH / MISMATCH / NOT_COMPARABLE per claim. Mismatches are results, so the
exit code stays 0."""

from __future__ import annotations

import argparse
import sys

from commands.audit import CSV_HEADER, csv_rows, render_json, render_text, run_audit
from commands.shared import emit_csv, emit_text
from utils.settings import EngineConfig


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("audit", help="recompute the published claims and compare")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace, cfg: EngineConfig) -> int:
    report = run_audit(cfg)
    if args.format == "json":
        sys.stdout.write(render_json(report))
    elif args.format == "csv":
        emit_csv(CSV_HEADER, csv_rows(report))
    else:
        emit_text(render_text(report))
    return 0
