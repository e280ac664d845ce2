from __future__ import annotations

import json
import math

import pytest

import main as cli
from commands.audit import (
    CATALOG_VERSION,
    Claim,
    Relation,
    Status,
    UnknownQuantityError,
    Workbench,
    build_catalog,
    judge,
)
from utils.settings import load_engine_config


def _audit_json(capsys):
    code = cli.main(["audit", "--format", "json"])
    out = capsys.readouterr().out
    assert code == 0
    return out


@pytest.fixture
def report(capsys):
    raw = _audit_json(capsys)
    doc = json.loads(raw)
    return raw, doc, {e["claim_id"]: e for e in doc["entries"]}


def test_catalog_ids_are_unique():
    ids = [c.claim_id for c in build_catalog()]
    assert len(ids) == len(set(ids))
    assert len(ids) >= 25


def test_judge_rules():
    eq = Claim("x", "src", 5, "g:S3")
    assert judge(eq, 5) is Status.MATCH
    assert judge(eq, 6) is Status.MISMATCH
    flagged = Claim("y", "src", 5, "g:S3", flagged=True)
    assert judge(flagged, 5) is Status.MATCH
    assert judge(flagged, 6) is Status.NOT_COMPARABLE
    gt = Claim("z", "src", 10, "h:S3", relation=Relation.GREATER_THAN)
    assert judge(gt, 11) is Status.MATCH
    assert judge(gt, 10) is Status.MISMATCH


def test_unknown_quantity():
    with pytest.raises(UnknownQuantityError):
        Workbench(load_engine_config()).evaluate("volume:S3")


def test_report_covers_exactly_the_catalog(report):
    _, doc, entries = report
    assert doc["catalog_version"] == CATALOG_VERSION
    assert [e["claim_id"] for e in doc["entries"]] == [c.claim_id for c in build_catalog()]
    assert sum(doc["summary"].values()) == len(entries)
    for e in entries.values():
        assert e["status"] in {"MATCH", "MISMATCH", "NOT_COMPARABLE"}


def test_anchor_claims_match(report):
    _, _, entries = report
    for cid in ("g_S3", "h_S3", "g_S4", "h_S4", "g_A4", "h_D4", "h_D6", "h_D8", "h_D20", "h_C3", "h_A3",
                "h_V4", "S5_maximal_orders", "S5_order12_type", "S5_order20_type_table",
                "A5_maximal_count", "A5_maximal_types", "S5_trivial_from_rank", "h_S5_floor"):
        assert entries[cid]["status"] == "MATCH", cid


def test_known_discrepancies(report):
    _, _, entries = report
    assert entries["h_D10"]["computed"] == 14
    assert entries["h_D10"]["status"] == "MISMATCH"
    assert entries["h_C4"]["computed"] == 4
    assert entries["h_C4"]["status"] == "MISMATCH"
    assert entries["g_D12_in_S5"]["status"] == "NOT_COMPARABLE"
    assert entries["S5_order20_type_text"]["computed"] == "F20"
    assert entries["S5_order20_type_text"]["status"] == "NOT_COMPARABLE"
    assert entries["sn_bound_constant_5"]["computed"] == 2360
    assert entries["S5_c21"]["published"] == 21
    assert entries["S5_c21"]["computed"] == 22
    assert entries["S5_c21"]["status"] == "MISMATCH"
    assert entries["S5_c21"]["note"]


def test_tail_rank_sums_are_signed_binomials(report):
    _, _, entries = report
    for r in range(8, 23):
        e = entries[f"S5_c{r:02d}"]
        assert e["computed"] == (-1) ** (r - 1) * math.comb(22, r)
        assert e["status"] == ("MATCH" if e["published"] == e["computed"] else "MISMATCH")


def test_rank_sums_reassemble_h(report):
    _, _, entries = report
    total = 2 * sum(entries[f"S5_c{r:02d}"]["computed"] for r in range(1, 23))
    assert total == entries["h_S5"]["computed"]


def test_audit_is_deterministic(capsys):
    assert _audit_json(capsys) == _audit_json(capsys)


def test_audit_text_and_csv(capsys):
    assert cli.main(["audit"]) == 0
    out = capsys.readouterr().out
    assert "summary:" in out and "g_S3" in out
    assert cli.main(["audit", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "claim_id,location,source,relation,published,computed,status,note"
    assert len(lines) == len(build_catalog()) + 1


def test_every_entry_has_a_location(report):
    _, _, entries = report
    for e in entries.values():
        assert e["location"], e["claim_id"]
    assert entries["h_S4"]["location"] == "Theorem 2"
    assert entries["S5_c07"]["location"] == "§4, c_7"


def test_text_report_shows_locations(capsys):
    assert cli.main(["audit"]) == 0
    assert "at: Theorem 4" in capsys.readouterr().out


def test_listed_generating_sets_close_to_maximal_subgroups(report):
    _, _, entries = report
    listed = [cid for cid in entries if cid.startswith(("S5_table_", "S5_M"))]
    assert len(listed) == 4 + 10 + 6
    for cid in listed:
        assert entries[cid]["status"] == "MATCH", cid
    assert entries["S5_M17"]["computed"] == 20
    assert entries["S5_table_A5"]["computed"] == 60
    assert entries["S5_listed_order12_distinct"]["computed"] == 10
    assert entries["S5_listed_order20_distinct"]["computed"] == 6


def test_named_intersections(report):
    _, _, entries = report
    assert entries["S5_meet_M2_M3"]["computed"] == "C2"
    assert entries["S5_meet_M2_M7"]["computed"] == "V4"
    assert entries["S5_meet_M1_M17"]["computed"] == "D10"
    for cid in (c for c in entries if c.startswith("S5_meet_")):
        assert entries[cid]["status"] == "MATCH", cid


def test_workbench_generating_set_quantities():
    bench = Workbench(load_engine_config())
    assert bench.evaluate("maximal:S5:(1,2)") == "not maximal (order 2)"
    assert bench.evaluate("maximal:S5:(1,2,3,4);(1,4)") == 24
    assert bench.evaluate("distinct-maximal:S5:(1,2,3);(1,2);(4,5)|(1,2);(1,2,3);(4,5)|(1,2)") == 1
    assert bench.evaluate("meet:S5:(1,2,3);(1,2);(4,5)|(1,2,4);(1,2);(3,5)=(1,2)") == "C2"
    assert bench.evaluate("meet:S5:(1,2,3);(1,2);(4,5)|(1,2,4);(1,2);(3,5)=(4,5)") == "C2, not <(4,5)>"
