import os
from dataclasses import dataclass, replace
from typing import Optional


def env_int(name: str, default: int = 0) -> int:
    try:
        return int((os.getenv(name) or "").strip())
    except Exception:
        return default


@dataclass(frozen=True)
class EngineConfig:
    # group-engine
    closure_cap: int = 10_000
    symmetric_max_degree: int = 6      # S_n and A_n
    cyclic_max_order: int = 200
    dihedral_max_order: int = 200

    # lattice-builder
    lattice_cap: int = 720
    contains_matrix_threshold: int = 256

    # chain-counter
    oracle_budget: int = 10_000_000    # enumerated chains before giving up
    ie_max_maximals: int = 24


def load_engine_config(budget_override: Optional[int] = None) -> EngineConfig:
    """Defaults, plus the one allowed override: the naive-oracle budget.

    Resolution for the budget:
      1. ``budget_override`` (the CLI ``--budget`` flag)
      2. CHAINS_ORACLE_BUDGET env var
      3. built-in default
    """
    cfg = EngineConfig()
    budget = env_int("CHAINS_ORACLE_BUDGET", cfg.oracle_budget)
    if budget_override is not None:
        budget = int(budget_override)
    return replace(cfg, oracle_budget=max(1, budget))


ENGINE = load_engine_config()
