"""Command-line front end for cubic_loci.

Exit codes: 0 on success, 1 when verification finds a failing check, 2 on
usage errors and on any :class:`~cubic_loci.exceptions.CubicLociError`.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from cubic_loci import __version__
from cubic_loci.config_loader import load_config
from cubic_loci.exceptions import CubicLociError
from cubic_loci.families import FamilyRegistry
from cubic_loci.logging_pipeline import (
    configure_structured_logging,
    detach_queue_handlers,
    shutdown_listeners,
)
from cubic_loci.reporting import (
    REPORT_FORMATS,
    brauer_payload,
    classify_payload,
    dumps_json,
    families_payload,
    overlattices_payload,
    run_report,
    run_verify,
    shortvec_payload,
)
from cubic_loci.settings import CubicLociSettings, get_settings

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

Handler = Callable[[argparse.Namespace, FamilyRegistry], int]


def _registry(args: argparse.Namespace, settings: CubicLociSettings) -> FamilyRegistry:
    return load_config(args.config, settings=settings).registry()


def _cmd_report(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    text = run_report(args.family, args.format, registry)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    summary = run_verify([args.family] if args.family else None)
    for check in summary.checks:
        print(check.line)
    print(summary.headline)
    if not summary.passed:
        failing = sorted({check.family for check in summary.failures})
        print(f"verification failed for: {', '.join(failing)}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    sys.stdout.write(dumps_json(classify_payload(registry.get(args.family), args.tau)))
    return EXIT_OK


def _cmd_shortvec(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    payload = shortvec_payload(registry.get(args.family), args.tau, args.bound)
    sys.stdout.write(dumps_json(payload))
    return EXIT_OK


def _cmd_overlattices(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    sys.stdout.write(dumps_json(overlattices_payload(registry.get(args.family), args.tau)))
    return EXIT_OK


def _cmd_brauer(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    payload = brauer_payload(registry.get(args.family), args.tau, args.k)
    sys.stdout.write(dumps_json(payload))
    return EXIT_OK


def _cmd_families(args: argparse.Namespace, registry: FamilyRegistry) -> int:
    sys.stdout.write(dumps_json(families_payload(registry)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        help="Family configuration file (YAML or JSON). Defaults to CUBIC_LOCI_CONFIG.",
    )

    parser = argparse.ArgumentParser(
        prog="cubic-loci",
        description="Lattice classification of intersections of cubic fourfold divisors.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    report = sub.add_parser("report", parents=[common], help="Emit a family report.")
    report.add_argument("--family", required=True)
    report.add_argument("--format", default="json", choices=REPORT_FORMATS)
    report.add_argument("--out", help="Write the report to this path instead of stdout.")
    report.set_defaults(handler=_cmd_report)

    verify = sub.add_parser(
        "verify", parents=[common], help="Check built-in families against published values."
    )
    verify.add_argument("--family")
    verify.set_defaults(handler=_cmd_verify)

    for name, handler, helptext in (
        ("classify", _cmd_classify, "Decide whether C_tau is empty."),
        ("overlattices", _cmd_overlattices, "Print the overlattice candidate ledger."),
        ("brauer", _cmd_brauer, "Decide the Brauer classes at one tau."),
    ):
        query = sub.add_parser(name, parents=[common], help=helptext)
        query.add_argument("family")
        query.add_argument("--tau", type=int, required=True)
        if name == "brauer":
            query.add_argument("--k", type=int, choices=(1, 2, 3))
        query.set_defaults(handler=handler)

    shortvec = sub.add_parser(
        "shortvec", parents=[common], help="Enumerate vectors of norm at most --bound."
    )
    shortvec.add_argument("family")
    shortvec.add_argument("--tau", type=int, required=True)
    shortvec.add_argument("--bound", type=int, default=2)
    shortvec.set_defaults(handler=_cmd_shortvec)

    families = sub.add_parser("families", parents=[common], help="List registered families.")
    families.set_defaults(handler=_cmd_families)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run the CLI and return its exit code."""

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings()
    logger = logging.getLogger("cubic_loci")
    listener = configure_structured_logging(
        logger, trace_id=settings.trace_id, level=settings.log_level_number
    )
    handler: Handler = args.handler
    try:
        return handler(args, _registry(args, settings))
    except CubicLociError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        shutdown_listeners([listener])
        detach_queue_handlers(logger)


if __name__ == "__main__":
    raise SystemExit(main())
