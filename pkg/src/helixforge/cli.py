"""Command-line entry point: ``helixforge <command> --config <file> ...``."""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import __version__
from .commands import run_command
from .config import COMMANDS, parse_config
from .errors import ConfigError


def _window(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(-?\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"window must look like a:b, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"window {text!r} has lo > hi")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="helixforge", description=__doc__)
    parser.add_argument("--version", action="version", version=f"helixforge {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, type=Path, help="TOML run configuration")
    parser.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    parser.add_argument(
        "--window",
        type=_window,
        help="helix and triviality window as lo:hi (write --window=-10:10 for a negative lo)",
    )
    parser.add_argument("--seed", type=int, help="override the config seed")
    parser.add_argument("--no-timing", action="store_true", help="emit timing_ms = null for byte-identical reports")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.config.read_text()
    except OSError as exc:
        print(f"helixforge: cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        cfg = parse_config(text, command=args.command)
    except ConfigError as exc:
        rule = f" [rule: {exc.rule}]" if exc.rule else ""
        print(f"helixforge: {args.config}: {exc}{rule}", file=sys.stderr)
        return 2
    if args.window is not None:
        cfg.windows["helix"] = args.window
        cfg.windows["triviality"] = args.window
    if args.seed is not None:
        cfg.seed = args.seed
    report = run_command(args.command, cfg, timing=not args.no_timing)
    text = report.to_json()
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
