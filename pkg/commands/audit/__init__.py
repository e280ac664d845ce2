# commands/audit/__init__.py
"""Audit submodule - claim catalog, recomputation and rendering for audit_cmd."""

from .catalog import CATALOG_VERSION, S5_RANK_SUMS, build_catalog
from .compute import UnknownQuantityError, Workbench, run_audit
from .models import AuditEntry, AuditReport, Claim, Relation, Status, judge
from .render import CSV_HEADER, csv_rows, render_json, render_text

__all__ = [
    # Catalog
    "CATALOG_VERSION",
    "S5_RANK_SUMS",
    "build_catalog",
    # Models
    "AuditEntry",
    "AuditReport",
    "Claim",
    "Relation",
    "Status",
    "judge",
    # Compute
    "UnknownQuantityError",
    "Workbench",
    "run_audit",
    # Render
    "CSV_HEADER",
    "csv_rows",
    "render_json",
    "render_text",
]
