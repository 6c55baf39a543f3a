"""
Command-line entry point for the verification suites.

    python -m src.api fano --format markdown --out report.md
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from config.settings import settings
from src import __version__
from src.orchestration.report import render_json, render_markdown
from src.orchestration.suites import SUITES, run_suite
from src.utils.errors import UnknownSuiteError
from src.utils.logger import configure_console, log_system

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lorentz-verify", description="Re-derive the lattice and chamber results by exact computation.")
    parser.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    parser.add_argument("--format", choices=("json", "markdown"), default=None, help="report format (default from settings)")
    parser.add_argument("--out", default=None, help="write the report here instead of stdout")
    parser.add_argument("--cache-dir", default=None, help="vertex catalog cache directory")
    parser.add_argument("--no-cache", action="store_true", help="never read or write the vertex cache")
    parser.add_argument("--threads", type=int, default=None, help="workers for enumeration and for independent suites")
    parser.add_argument("--verbose", action="store_true", help="progress on stderr and elapsed_ms in the report")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_console(args.verbose)

    threads = args.threads if args.threads is not None else settings.threads
    if threads < 1:
        parser.error("--threads must be at least 1")
    report_format = args.format or settings.report_format
    if report_format not in ("json", "markdown"):
        parser.error(f"unsupported report format {report_format!r}")
    use_cache = settings.use_cache and not args.no_cache
    cache_dir = (args.cache_dir or settings.cache_dir) if use_cache else None

    try:
        report = run_suite(args.suite, threads=threads, cache_dir=cache_dir)
    except UnknownSuiteError as e:
        parser.error(str(e))

    render = render_markdown if report_format == "markdown" else render_json
    text = render(report, verbose=args.verbose)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding="utf-8")
        log_system(f"[CLI] report written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
