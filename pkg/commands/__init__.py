# commands/__init__.py
"""CLI subcommands. Each module exposes register(subparsers) and run(args, cfg)."""
