from __future__ import annotations

import sys
from typing import Optional, Tuple

from utils.console import c, color_enabled

# ---- central mapping (shared by all modules) ----

PREFIX_COLORS = {
    # Entry point
    "boot": "cyan",
    "cli": "cyan",

    # Group construction
    "group": "blue",

    # Lattice + counting
    "lattice": "magenta",
    "chains": "green",
    "ie": "green",

    # Classification + reporting
    "iso": "yellow",
    "audit": "yellow",
    "export": "white",
}

LEVEL_COLORS = {
    "debug": "grey",
    "info": "white",
    "ok": "green",
    "warn": "yellow",
    "error": "red",
}

LEVEL_RANK = {
    "debug": 10,
    "info": 20,
    "ok": 25,
    "warn": 30,
    "error": 40,
}

_min_rank = LEVEL_RANK["info"]


def set_log_level(level: str) -> None:
    """Drop messages below ``level`` (one of debug/info/ok/warn/error)."""
    global _min_rank
    _min_rank = LEVEL_RANK.get((level or "info").lower(), LEVEL_RANK["info"])


def get_log_level() -> str:
    for name, rank in LEVEL_RANK.items():
        if rank == _min_rank:
            return name
    return "info"


def split_prefix(text: str) -> Tuple[Optional[str], str]:
    t = (text or "").strip()
    if not t.startswith("["):
        return None, t
    end = t.find("]")
    if end <= 1:
        return None, t
    prefix = t[1:end].strip()
    rest = t[end + 1 :].lstrip()
    return prefix, rest


def format_console(text: str, *, level: str = "info", colored: bool = True) -> str:
    prefix, rest = split_prefix(text)
    lvl = (level or "info").lower()
    lvl_color = LEVEL_COLORS.get(lvl, "white")

    if prefix:
        p_color = PREFIX_COLORS.get(prefix.lower(), lvl_color)
        head = c(f"[{prefix}]", p_color, bold=True, enabled=colored)
        return f"{head} {c(rest, lvl_color, enabled=colored)}" if rest else head

    return c(text, lvl_color, enabled=colored)


# ---- Sync logging; stdout is reserved for command output ----

def log_sync(text: str, *, level: str = "info") -> None:
    """
    Colored console log on stderr.

    Args:
        text: Message to log (can include [prefix] at start).
        level: One of 'debug', 'info', 'ok', 'warn', 'error'.

    Example:
        log_sync("[lattice] S5: 156 subgroups", level="ok")
        log_sync("[ie] k=22 maximal subgroups, walking subsets", level="debug")
    """
    lvl = (level or "info").lower()
    if LEVEL_RANK.get(lvl, LEVEL_RANK["info"]) < _min_rank:
        return
    raw = str(text or "")
    stream = sys.stderr
    try:
        print(format_console(raw, level=lvl, colored=color_enabled(stream)), file=stream)
    except Exception:
        print(raw, file=stream)


# Convenience aliases for sync logging
def log_debug(text: str) -> None:
    log_sync(text, level="debug")

def log_info(text: str) -> None:
    log_sync(text, level="info")

def log_ok(text: str) -> None:
    log_sync(text, level="ok")

def log_warn(text: str) -> None:
    log_sync(text, level="warn")

def log_error(text: str) -> None:
    log_sync(text, level="error")
