# commands/audit/models.py
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Tuple


class Status(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    NOT_COMPARABLE = "NOT_COMPARABLE"


class Relation(str, Enum):
    EQUALS = "equals"
    GREATER_THAN = "greater_than"


@dataclass(frozen=True)
class Claim:
    """
    One published number (or census) and how to recompute it.

    - quantity: key understood by compute.Workbench.
    - location: where the number is printed, e.g. "Theorem 2" or "§4, c_7".
    - flagged: the published convention is uncertain; a difference is
      reported as NOT_COMPARABLE instead of MISMATCH.
    """
    claim_id: str
    source: str
    published: Any
    quantity: str
    relation: Relation = Relation.EQUALS
    flagged: bool = False
    note: str = ""
    location: str = ""


@dataclass(frozen=True)
class AuditEntry:
    claim_id: str
    source: str
    published: Any
    computed: Any
    relation: str
    status: Status
    note: str = ""
    location: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "location": self.location,
            "source": self.source,
            "published": self.published,
            "computed": self.computed,
            "relation": self.relation,
            "status": self.status.value,
            "note": self.note,
        }


@dataclass(frozen=True)
class AuditReport:
    catalog_version: str
    entries: Tuple[AuditEntry, ...] = field(default=())

    @property
    def summary(self) -> Dict[str, int]:
        counts = Counter(e.status.value for e in self.entries)
        return {s.value: counts.get(s.value, 0) for s in Status}

    def as_dict(self) -> Dict[str, Any]:
        return {
            "catalog_version": self.catalog_version,
            "entries": [e.as_dict() for e in self.entries],
            "summary": self.summary,
        }


def judge(claim: Claim, computed: Any) -> Status:
    if claim.relation is Relation.GREATER_THAN:
        ok = computed > claim.published
    else:
        ok = computed == claim.published
    if ok:
        return Status.MATCH
    return Status.NOT_COMPARABLE if claim.flagged else Status.MISMATCH


def entry_for(claim: Claim, computed: Any) -> AuditEntry:
    return AuditEntry(
        claim_id=claim.claim_id,
        source=claim.source,
        published=claim.published,
        computed=computed,
        relation=claim.relation.value,
        status=judge(claim, computed),
        note=claim.note,
        location=claim.location,
    )
