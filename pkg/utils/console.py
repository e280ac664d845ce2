from __future__ import annotations

import sys

from colorama import Fore, Style, just_fix_windows_console

# Safe to call multiple times; fixes Windows terminal ANSI handling.
just_fix_windows_console()

RESET = Style.RESET_ALL

PALETTE = {
    "grey": Fore.LIGHTBLACK_EX,
    "red": Fore.LIGHTRED_EX,
    "green": Fore.LIGHTGREEN_EX,
    "yellow": Fore.LIGHTYELLOW_EX,
    "blue": Fore.LIGHTBLUE_EX,
    "magenta": Fore.LIGHTMAGENTA_EX,
    "cyan": Fore.LIGHTCYAN_EX,
    "white": Fore.WHITE,
}

# Audit statuses share the palette with log levels
STATUS_COLORS = {
    "MATCH": "green",
    "MISMATCH": "red",
    "NOT_COMPARABLE": "yellow",
}


def color_enabled(stream=None) -> bool:
    """Colour only when writing to a terminal; files and pipes get plain text."""
    stream = stream or sys.stdout
    return bool(getattr(stream, "isatty", lambda: False)())


def c(text: str, color: str | None = None, *, bold: bool = False, enabled: bool = True) -> str:
    if not color or not enabled:
        return text
    code = PALETTE.get(color.lower(), "")
    if not code:
        return text
    b = Style.BRIGHT if bold else ""
    return f"{b}{code}{text}{RESET}"


def status_text(status: str, *, enabled: bool = True) -> str:
    return c(status, STATUS_COLORS.get(status.upper()), bold=True, enabled=enabled)


def cprint(text: str, color: str | None = None, *, bold: bool = False, **print_kwargs) -> None:
    stream = print_kwargs.get("file") or sys.stdout
    print(c(text, color, bold=bold, enabled=color_enabled(stream)), **print_kwargs)
