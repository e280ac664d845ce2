import argparse
import importlib
import sys
from typing import List, Optional

from dotenv import load_dotenv
from colorama import just_fix_windows_console

just_fix_windows_console()
load_dotenv()

from utils.logger import log_debug, log_error, log_warn, set_log_level
from utils.settings import load_engine_config

from chain_counter import (
    InclusionExclusionBoundError,
    MethodDisagreement,
    OracleBudgetExceeded,
)
from group_engine import ClosureCapExceeded, GroupEngineError
from lattice_builder import LatticeCapExceeded

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DISAGREEMENT = 3
EXIT_LIMIT = 4

COMMAND_MODULES = [
    "commands.count_cmd",
    "commands.lattice_cmd",
    "commands.audit_cmd",
    "commands.formula_cmd",
]

LIMIT_ERRORS = (ClosureCapExceeded, LatticeCapExceeded, OracleBudgetExceeded, InclusionExclusionBoundError)


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--budget", type=int, default=None, help="naive-oracle chain budget (overrides CHAINS_ORACLE_BUDGET)")
    p.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chains",
        description="Subgroup lattices, chain counts g(G) and h(G), and an audit of published values.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for mod_name in COMMAND_MODULES:
        try:
            importlib.import_module(mod_name).register(subparsers)
        except Exception as e:
            log_warn(f"[boot] ⚠️ Failed to load command module '{mod_name}': {e}")

    for sp in subparsers.choices.values():
        _add_common_flags(sp)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_log_level("debug" if args.verbose else "info")
    cfg = load_engine_config(args.budget)
    log_debug(f"[boot] {args.command}: {cfg}")

    try:
        return int(args.handler(args, cfg) or 0)
    except MethodDisagreement as e:
        log_error(f"[cli] method disagreement: {e}")
        return EXIT_DISAGREEMENT
    except LIMIT_ERRORS as e:
        log_error(f"[cli] {type(e).__name__}: {e}")
        return EXIT_LIMIT
    except (ValueError, KeyError, OSError, GroupEngineError) as e:
        log_error(f"[cli] {type(e).__name__}: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
