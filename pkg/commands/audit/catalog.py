# commands/audit/catalog.py
"""The published claims the audit recomputes.

Bump CATALOG_VERSION whenever a claim is added, removed or its published
value is corrected; the JSON report carries it.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from commands.audit.models import Claim, Relation

CATALOG_VERSION = "1.3"

# Published rank sums c_1..c_22 for S5 (22 maximal subgroups).
S5_RANK_SUMS = (
    2842, -1504, 2430, -7901, 26634, -74698, 170555, -319770, 497420, -646646, 705432,
    -646646, 497420, -319770, 170544, -74613, 26334, -7315, 1540, -231, 21, -1,
)

# Published types of the nontrivial r-wise intersections of S5's maximal
# subgroups, keyed by canonical label.
S5_INTERSECTION_TYPES = {
    2: {"A4": 5, "C2": 90, "C4": 45, "D10": 6, "S3": 40, "V4": 45},
    3: {"C2": 560, "C3": 30, "C4": 15, "S3": 10, "V4": 15},
    4: {"C2": 576, "C3": 10},
    5: {"C2": 300},
    6: {"C2": 85},
    7: {"C2": 10},
}

# Generating sets as printed, ";" between generators.
S5_TABLE_ROWS: Dict[str, Tuple[str, int]] = {
    "S3xS2": ("(1,2,3);(1,2);(4,5)", 12),
    "GA15": ("(1,2,3,4,5);(2,3,5,4)", 20),
    "S4": ("(1,2,3,4);(1,4)", 24),
    "A5": ("(1,2,3,4,5);(1,2,3)", 60),
}

S5_LISTED_ORDER12: Dict[str, str] = {
    "M2": "(1,2,3);(1,2);(4,5)",
    "M3": "(1,2,4);(1,2);(3,5)",
    "M4": "(1,2,5);(1,2);(3,4)",
    "M5": "(1,3,4);(1,3);(2,5)",
    "M6": "(1,3,5);(1,3);(2,4)",
    "M7": "(1,4,5);(1,4);(2,3)",
    "M8": "(2,3,4);(2,3);(1,5)",
    "M9": "(2,3,5);(2,3);(1,4)",
    "M10": "(2,4,5);(2,4);(1,3)",
    "M11": "(3,4,5);(3,4);(1,2)",
}

S5_LISTED_ORDER20: Dict[str, str] = {
    "M17": "(2,3,4,5);(2,4)(3,5);(1,2,3,5,4)",
    "M18": "(2,3,5,4);(2,5)(3,4);(1,2,3,4,5)",
    "M19": "(2,4,3,5);(2,3)(4,5);(1,2,4,5,3)",
    "M20": "(2,4,5,3);(2,5)(3,4);(1,2,4,3,5)",
    "M21": "(2,5,3,4);(2,3)(4,5);(1,2,5,4,3)",
    "M22": "(2,5,4,3);(2,4)(3,5);(1,2,5,3,4)",
}

# M1 is the A5 row; the order-24 subgroups are printed without generators,
# so only intersections among listed subgroups are checkable.
_LISTED = {"M1": S5_TABLE_ROWS["A5"][0], **S5_LISTED_ORDER12, **S5_LISTED_ORDER20}

# (members, printed generators of the intersection, printed type)
S5_NAMED_INTERSECTIONS: Tuple[Tuple[Tuple[str, ...], str, str], ...] = (
    (("M1", "M2"), "(1,2,3);(2,3)(4,5)", "S3"),
    (("M1", "M17"), "(2,4)(3,5);(1,2,3,5,4)", "D10"),
    (("M1", "M22"), "(2,4)(3,5);(1,2)(4,5)", "D10"),
    (("M2", "M7"), "(4,5);(2,3)", "V4"),
    (("M2", "M3"), "(1,2)", "C2"),
    (("M4", "M19"), "(1,2)(3,4)", "C2"),
)

_DIHEDRAL_NOTE = "published value stands for a maximal subgroup whose chain convention is unclear"


def _g(claim_id: str, spec: str, value: int, source: str, location: str, **kw) -> Claim:
    return Claim(claim_id, source, value, f"g:{spec}", location=location, **kw)


def _h(claim_id: str, spec: str, value: int, source: str, location: str, **kw) -> Claim:
    return Claim(claim_id, source, value, f"h:{spec}", location=location, **kw)


def _generating_set_claims() -> List[Claim]:
    claims: List[Claim] = []
    for row, (gens, order) in S5_TABLE_ROWS.items():
        claims.append(
            Claim(f"S5_table_{row}", f"table row {row}: generating set closes to a maximal subgroup",
                  order, f"maximal:S5:{gens}", location="§3 Table")
        )
    for listing, location, order in ((S5_LISTED_ORDER12, "§3, order-12 list", 12),
                                     (S5_LISTED_ORDER20, "§3, order-20 list", 20)):
        for name, gens in listing.items():
            claims.append(
                Claim(f"S5_{name[0]}{int(name[1:]):02d}", f"{name}: generating set closes to a maximal subgroup",
                      order, f"maximal:S5:{gens}", location=location)
            )
        claims.append(
            Claim(f"S5_listed_order{order}_distinct", f"the order-{order} list names distinct maximal subgroups",
                  len(listing), "distinct-maximal:S5:" + "|".join(listing.values()), location=location)
        )
    for members, gens, label in S5_NAMED_INTERSECTIONS:
        claims.append(
            Claim("S5_meet_" + "_".join(members), f"intersection of {' and '.join(members)} is <{gens}>",
                  label, "meet:S5:" + "|".join(_LISTED[m] for m in members) + f"={gens}",
                  location="§4, named intersections",
                  note="published as C2 x C2" if label == "V4" else "")
        )
    return claims


def build_catalog() -> List[Claim]:
    claims: List[Claim] = [
        # maximal chains
        _g("g_S3", "S3", 4, "maximal chains of S3 (= D6)", "Eq. (4)"),
        _g("g_S4", "S4", 44, "maximal chains of S4", "Theorem 1"),
        _g("g_A4", "A4", 7, "g(A4) term of the A5 maximal-subgroup sum", "§3, sum for g(A5)"),
        Claim("g_D10_in_A5", "g(D10) term of the A5 maximal-subgroup sum", 8, "g:max:A5:10",
              flagged=True, note=_DIHEDRAL_NOTE, location="§3, sum for g(A5)"),
        _g("g_A5", "A5", 123, "maximal chains of A5", "Lemma 1"),
        Claim("g_D12_in_S5", "g(D12) term of the S5 maximal-subgroup sum", 10, "g:max:S5:12",
              flagged=True, note=_DIHEDRAL_NOTE, location="§3, sum for g(S5)"),
        Claim("g_D20_in_S5", "g(D20) term of the S5 maximal-subgroup sum", 18, "g:max:S5:20",
              flagged=True, note=_DIHEDRAL_NOTE, location="§3, sum for g(S5)"),
        _g("g_S5", "S5", 551, "maximal chains of S5", "Theorem 3 (§3)"),

        # chains ending in G
        _h("h_S3", "S3", 10, "chains ending in S3 (= D6)", "Eq. (5)"),
        _h("h_S4", "S4", 232, "chains ending in S4", "Theorem 2"),
        _h("h_D4", "D4", 8, "dihedral values: h(D4)", "§4, dihedral values"),
        _h("h_D6", "D6", 10, "dihedral values: h(D6)", "§4, dihedral values"),
        _h("h_D8", "D8", 32, "dihedral values: h(D8)", "§4, dihedral values"),
        _h("h_D10", "D10", 68, "dihedral values: h(D10)", "§4, dihedral values",
           note="the prime-power closed form gives 14 for order 10"),
        _h("h_D20", "D20", 100, "dihedral values: h(D20)", "§4, dihedral values"),
        Claim("h_V4", "h(C2 x C2) = h(C4) = h(D4)", 8, "h:D4", location="§4, order-4 values",
              note="the order-4 dihedral group is C2 x C2"),
        _h("h_C4", "C4", 8, "h(C2 x C2) = h(C4) = h(D4)", "§4, order-4 values"),
        _h("h_A3", "A3", 2, "h(A3) = h(C3)", "§4, order-3 values"),
        _h("h_C3", "C3", 2, "h(A3) = h(C3)", "§4, order-3 values"),
        _h("h_A5", "A5", 402, "chains ending in A5", "Theorem 3 (§4)"),
        _h("h_S5", "S5", 4154, "chains ending in S5", "Theorem 4"),
        Claim("h_S5_floor", "numeric floor from the S_n lower bound at n = 5", 1942, "h:S5",
              relation=Relation.GREATER_THAN, location="Eq. (7)"),
        Claim("sn_bound_constant_5", "S_n lower bound at n = 5: constant beside 2 h(A5)", 1940,
              "bound:constant:5", location="§4, bound (6) at n = 5"),

        # maximal subgroup structure
        Claim("S5_maximal_orders", "orders of the maximal subgroups of S5",
              {"12": 10, "20": 6, "24": 5, "60": 1}, "census:max-order:S5", location="§3 Table, Number column"),
        Claim("S5_order12_type", "type of the order-12 maximal subgroups of S5", "D12", "label:max:S5:12",
              location="§3, order-12 list"),
        Claim("S5_order20_type_table", "type of the order-20 maximal subgroups of S5 (table)", "F20",
              "label:max:S5:20", note="published as GA(1,5)", location="§3 Table"),
        Claim("S5_order20_type_text", "type of the order-20 maximal subgroups of S5 (text)", "D20",
              "label:max:S5:20", flagged=True, location="§3, order-20 list",
              note="conflicts with the GA(1,5) label for the same subgroups"),
        Claim("A5_maximal_count", "number of maximal subgroups of A5", 21, "count:max:A5",
              location="§3, sum for g(A5)"),
        Claim("A5_maximal_types", "types of the maximal subgroups of A5",
              {"A4": 5, "D10": 6, "S3": 10}, "census:max-label:A5", location="§3, sum for g(A5)"),

        # inclusion-exclusion on S5
        Claim("S5_trivial_from_rank", "every r-wise intersection of S5 maximals is trivial for r >= 8", 8,
              "ie:trivial-from:S5", location="§4, intersections for r >= 8"),
    ]

    claims.extend(_generating_set_claims())

    for r, value in enumerate(S5_RANK_SUMS, start=1):
        note = ""
        if r == 7:
            note = "C(22,7) = C(22,15) but the published c_7 and c_15 differ"
        elif r == 21:
            note = "published value is one less than C(22,21)"
        claims.append(Claim(f"S5_c{r:02d}", f"S5 inclusion-exclusion rank {r} sum", value, f"ie:c:S5:{r}",
                            note=note, location=f"§4, c_{r}"))

    for r, census in S5_INTERSECTION_TYPES.items():
        claims.append(
            Claim(f"S5_rank{r}_types", f"types of nontrivial {r}-wise intersections of S5 maximals",
                  census, f"profile:S5:{r}", location="§4, named intersections")
        )

    return claims
