# commands/audit/render.py
from __future__ import annotations

import json
from typing import Any, List

from commands.audit.models import AuditReport
from utils.console import color_enabled, status_text


def _short(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def render_text(report: AuditReport) -> List[str]:
    colored = color_enabled()
    width = max((len(e.claim_id) for e in report.entries), default=8)
    lines = [f"audit catalog {report.catalog_version}: {len(report.entries)} claims"]
    for e in report.entries:
        rel = ">" if e.relation == "greater_than" else "="
        pad = " " * (16 - len(e.status.value))
        lines.append(
            f"  {e.claim_id:<{width}}  {status_text(e.status.value, enabled=colored)}{pad}"
            f"published {rel} {_short(e.published)}  computed {_short(e.computed)}"
        )
        if e.location:
            lines.append(f"  {'':<{width}}  at: {e.location}")
        if e.note:
            lines.append(f"  {'':<{width}}  note: {e.note}")
    lines.append("summary: " + "  ".join(f"{k}={v}" for k, v in report.summary.items()))
    return lines


def render_json(report: AuditReport) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n"


CSV_HEADER = ["claim_id", "location", "source", "relation", "published", "computed", "status", "note"]


def csv_rows(report: AuditReport):
    for e in report.entries:
        yield (e.claim_id, e.location, e.source, e.relation, e.published, e.computed, e.status.value, e.note)
