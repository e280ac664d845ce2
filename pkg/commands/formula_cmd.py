# commands/formula_cmd.py
"""`formula`: closed forms, each with a lattice DP cross-check when the
group fits under the caps."""

from __future__ import annotations

import argparse
from typing import Any, Dict, List, Optional

from chain_counter import (
    FactoredInteger,
    count_chains_ending,
    count_maximal_chains,
    g_cyclic_multinomial,
    h_dihedral_prime_power,
    lower_bound_split,
)
from commands.shared import emit_csv, emit_json, emit_text, named_lattice, symmetric_tables
from utils.logger import log_warn
from utils.settings import EngineConfig

KINDS = ("cyclic-g", "dihedral-h", "sn-bound")

EXIT_DISAGREEMENT = 3


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser("formula", help="evaluate a closed formula and cross-check it")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, help="cyclic order (cyclic-g) or degree (sn-bound)")
    p.add_argument("--p", type=int, help="prime (dihedral-h)")
    p.add_argument("--m", type=int, help="exponent (dihedral-h)")
    p.set_defaults(handler=run)


def _need(value: Optional[int], flag: str, kind: str) -> int:
    if value is None:
        raise ValueError(f"--kind {kind} needs {flag}")
    return int(value)


def _cyclic_g(args: argparse.Namespace, cfg: EngineConfig) -> Dict[str, Any]:
    n = _need(args.n, "--n", args.kind)
    value = g_cyclic_multinomial(FactoredInteger.of(n))
    check = None
    if n <= cfg.cyclic_max_order:
        check = count_maximal_chains(named_lattice(f"C{n}", cfg))
    return {"kind": args.kind, "params": {"n": n}, "formula": value, "lattice_dp": check}


def _dihedral_h(args: argparse.Namespace, cfg: EngineConfig) -> Dict[str, Any]:
    p = _need(args.p, "--p", args.kind)
    m = _need(args.m, "--m", args.kind)
    value = h_dihedral_prime_power(p, m, max_order=cfg.dihedral_max_order)
    check = count_chains_ending(named_lattice(f"D{2 * p ** m}", cfg))
    return {"kind": args.kind, "params": {"p": p, "m": m, "order": 2 * p ** m}, "formula": value, "lattice_dp": check}


def _sn_bound(args: argparse.Namespace, cfg: EngineConfig) -> Dict[str, Any]:
    n = _need(args.n, "--n", args.kind)
    if n > cfg.symmetric_max_degree:
        raise ValueError(f"degree {n} exceeds cap {cfg.symmetric_max_degree}")
    h_alt, h_sym = symmetric_tables(n, cfg)
    constant, coeff = lower_bound_split(n, h_alt, h_sym)
    bound = constant + coeff * h_alt[n]
    h_sn = count_chains_ending(named_lattice(f"S{n}", cfg))
    holds = h_sn >= bound
    if not holds:
        log_warn(f"[chains] computed h(S{n})={h_sn} is below the bound {bound}")
    return {
        "kind": args.kind,
        "params": {"n": n},
        "formula": bound,
        "constant": constant,
        "coefficient_of_h_an": coeff,
        "h_an": h_alt[n],
        "lattice_dp": h_sn,
        "bound_holds": holds,
    }


_HANDLERS = {
    "cyclic-g": _cyclic_g,
    "dihedral-h": _dihedral_h,
    "sn-bound": _sn_bound,
}


def run(args: argparse.Namespace, cfg: EngineConfig) -> int:
    result = _HANDLERS[args.kind](args, cfg)

    if args.format == "json":
        emit_json(result)
    elif args.format == "csv":
        emit_csv(["kind", "params", "formula", "lattice_dp"],
                 [(result["kind"], result["params"], result["formula"], result["lattice_dp"])])
    else:
        params = " ".join(f"{k}={v}" for k, v in result["params"].items())
        lines: List[str] = [f"{result['kind']} {params}"]
        if args.kind == "sn-bound":
            n = result["params"]["n"]
            lines.append(
                f"  bound   = {result['constant']} + {result['coefficient_of_h_an']}*h(A{n}) = {result['formula']}"
            )
            lines.append(f"  h(S_n)  = {result['lattice_dp']}  ({'bound holds' if result['bound_holds'] else 'BOUND VIOLATED'})")
        else:
            lines.append(f"  formula = {result['formula']}")
            if result["lattice_dp"] is not None:
                verdict = "agree" if result["lattice_dp"] == result["formula"] else "DIFFER"
                lines.append(f"  lattice = {result['lattice_dp']}  ({verdict})")
        emit_text(lines)

    if args.kind != "sn-bound" and result["lattice_dp"] not in (None, result["formula"]):
        return EXIT_DISAGREEMENT
    return 0
