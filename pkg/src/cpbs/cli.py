"""Command line entry point: ``cpbs <scenario> [--config PATH] [--out DIR] [--set k=v ...]``."""
from __future__ import annotations

import argparse
import sys

from .config import SCENARIOS, ConfigError, ParameterError, load_config
from .dynamics import IntegrationError
from .scenarios import OutputError, run_scenario

EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_OUTPUT = 4
EXIT_NUMERIC = 5


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpbs",
        description="Cooper-pair beam splitter entanglement scenarios (data files only).",
    )
    parser.add_argument("scenario", choices=SCENARIOS)
    parser.add_argument("--config", help="scenario config file; benchmark defaults if omitted")
    parser.add_argument("--out", help="output directory (overrides [run] out)")
    parser.add_argument(
        "--set", dest="overrides", action="append", default=[], metavar="SECTION.KEY=VALUE",
        help="override one config entry; repeatable",
    )
    return parser


def _fail(kind: str, message: str, code: int) -> int:
    print(f"cpbs: error[{kind}]: {message}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.scenario, args.config, args.overrides)
    except ParameterError as exc:
        return _fail("domain", str(exc), EXIT_DOMAIN)
    except ConfigError as exc:
        return _fail("config", str(exc), EXIT_CONFIG)
    try:
        paths = run_scenario(config, args.out)
    except OutputError as exc:
        return _fail("output", str(exc), EXIT_OUTPUT)
    except IntegrationError as exc:
        return _fail("numeric", str(exc), EXIT_NUMERIC)
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
