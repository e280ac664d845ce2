# lattice_store.py
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from group_engine import close_generators, subgroup_from_permutations
from iso_classifier import label_node
from lattice_builder import SubgroupLattice, assemble_lattice, maximal_subgroups
from permutations import format_permutation, parse_permutation
from utils.logger import log_ok


class LatticeDocumentError(ValueError):
    pass


def lattice_document(lattice: SubgroupLattice) -> Dict[str, Any]:
    """
    Plain-JSON view of a lattice.

    - group.generators: sorted cycle strings; closing them reproduces the
      element indexing the node ids were computed from.
    - nodes[i].id == i, in (order, mask) order.
    - covers: [child, parent] pairs, sorted.
    """
    parent = lattice.parent
    elements = parent.elements
    return {
        "group": {
            "degree": parent.degree,
            "order": parent.order,
            "generators": [format_permutation(g) for g in parent.generators],
        },
        "nodes": [
            {
                "id": i,
                "order": lattice.order(i),
                "label": label_node(lattice, i),
                "generators": [format_permutation(elements[x]) for x in lattice.generators[i]],
            }
            for i in range(len(lattice))
        ],
        "covers": [[a, b] for a, b in lattice.covers],
        "maximal_of_top": maximal_subgroups(lattice, lattice.top) if len(lattice) > 1 else [],
    }


def dumps_document(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_lattice(lattice: SubgroupLattice, path: str | Path) -> Path:
    out = Path(path)
    out.write_text(dumps_document(lattice_document(lattice)), encoding="utf-8")
    log_ok(f"[export] wrote {len(lattice)} nodes to {out}")
    return out


def load_lattice_document(doc: Dict[str, Any], *, cap: Optional[int] = None) -> SubgroupLattice:
    """Rebuild a lattice from ``lattice_document`` output.

    Only the group generators and each node's generators are trusted; orders,
    covers and labels are recomputed and the node ids must come back in the
    same positions.
    """
    try:
        group = doc["group"]
        degree = int(group["degree"])
        gens = [parse_permutation(s, degree) for s in group["generators"]]
        nodes: List[Dict[str, Any]] = list(doc["nodes"])
    except (KeyError, TypeError) as e:
        raise LatticeDocumentError(f"malformed lattice document: {e}") from None

    parent = close_generators(gens, cap, degree=degree)
    if parent.order != int(group.get("order", parent.order)):
        raise LatticeDocumentError(f"generators close to order {parent.order}, document says {group['order']}")

    masks = []
    for node in nodes:
        perms = [parse_permutation(s, degree) for s in node.get("generators", [])]
        masks.append(subgroup_from_permutations(parent, perms).mask)

    lattice = assemble_lattice(parent, masks)
    if len(lattice) != len(nodes):
        raise LatticeDocumentError(f"{len(nodes)} nodes in document, {len(lattice)} distinct subgroups")
    for node, mask in zip(nodes, masks):
        if lattice.node_of(mask) != int(node["id"]):
            raise LatticeDocumentError(f"node {node['id']} came back at position {lattice.node_of(mask)}")
    return lattice


def read_lattice(path: str | Path) -> SubgroupLattice:
    return load_lattice_document(json.loads(Path(path).read_text(encoding="utf-8")))
