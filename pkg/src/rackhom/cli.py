"""CLI interface for rackhom using argparse.

Exit codes: 0 success, 1 axiom or check failure, 2 usage, parse,
precondition or budget error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Sequence

from rackhom.algebra.families import FAMILY_NAMES, build_family
from rackhom.algebra.orbits import orbits
from rackhom.algebra.table import FiniteRack, validate_quandle, validate_rack
from rackhom.config import RackhomConfig, load_config
from rackhom.errors import (
    AxiomError,
    BudgetExceededError,
    MalformedTableError,
    PreconditionError,
    RackFileError,
)
from rackhom.formats import (
    Convention,
    GroupEntry,
    InputDescriptor,
    ResultDocument,
    dump_rack,
    exact_int,
    load_rack_file,
)
from rackhom.homology.bundle import THEORIES, RackComplexBundle, build_bundle, check_budget
from rackhom.homology.cocycles import two_cocycles
from rackhom.homology.coefficients import CoefficientSpec
from rackhom.homology.compute import cohomology, homology
from rackhom.linalg.groups import AbelianGroupPresentation
from rackhom.observability.logger import set_verbosity
from rackhom.observability.metrics import RunMetrics
from rackhom.verification.suite import VerificationSuite, build_checks

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Errors in the input or the request rather than in the mathematics.
_USAGE_ERRORS = (
    FileNotFoundError,
    RackFileError,
    MalformedTableError,
    PreconditionError,
    BudgetExceededError,
    ValueError,
)


def _add_rack_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("path", help="Rack file (JSON, op[x][y] = x▷y)")
    parser.add_argument(
        "--convention",
        choices=["left", "right"],
        default=None,
        help="Override the file's convention; 'right' transposes the table",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rackhom",
        description="rackhom: exact (co)homology of finite racks and quandles",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log more (-vv: debug)")
    parser.add_argument("--log-json", action="store_true", help="Emit logs as JSON lines")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    check_parser = subparsers.add_parser("check", help="Validate the rack axioms of a table")
    _add_rack_arguments(check_parser)
    check_parser.add_argument("--quandle", action="store_true", help="Also require x▷x = x")

    family_parser = subparsers.add_parser("family", help="Print a standard rack or quandle")
    family_parser.add_argument("name", choices=FAMILY_NAMES)
    family_parser.add_argument("params", nargs="*", type=int)

    for command, help_text in (
        ("homology", "Homology of the rack, quandle or degenerate complex"),
        ("cohomology", "Cohomology of the rack, quandle or degenerate complex"),
    ):
        sub = subparsers.add_parser(command, help=help_text)
        _add_rack_arguments(sub)
        sub.add_argument("--theory", choices=THEORIES, default="rack")
        sub.add_argument("--max-degree", type=int, default=3)
        sub.add_argument("--coeff", default="Z", help="Z or Z/m")

    cocycles_parser = subparsers.add_parser("cocycles", help="Second cohomology from 2-cocycles")
    _add_rack_arguments(cocycles_parser)
    cocycles_parser.add_argument("--theory", choices=["rack", "quandle"], default="quandle")
    cocycles_parser.add_argument("--coeff", default="Z/2", help="Z or Z/m")

    quillen_parser = subparsers.add_parser(
        "quillen", help="Quillen cohomology Dⁿ = H^{n+1} with trivial coefficients"
    )
    _add_rack_arguments(quillen_parser)
    quillen_parser.add_argument("--theory", choices=["rack", "quandle"], default="rack")
    quillen_parser.add_argument("--max-degree", type=int, default=2)
    quillen_parser.add_argument("--coeff", default="Z", help="Z or Z/m")

    verify_parser = subparsers.add_parser("verify", help="Run the acceptance suite")
    verify_parser.add_argument("--config", default=None, help="YAML run configuration")
    verify_parser.add_argument("--max-degree", type=int, default=None)
    verify_parser.add_argument(
        "--check", action="append", dest="checks", default=None, help="Run only this check"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    set_verbosity(level, json_format=args.log_json)

    try:
        match args.command:
            case "check":
                return _cmd_check(args.path, args.convention, args.quandle)
            case "family":
                return _cmd_family(args.name, args.params)
            case "homology" | "cohomology":
                return _cmd_groups(args)
            case "cocycles":
                return _cmd_cocycles(args)
            case "quillen":
                return _cmd_quillen(args)
            case "verify":
                return _cmd_verify(args.config, args.max_degree, args.checks)
            case _:
                parser.print_help()
                return EXIT_USAGE
    except AxiomError as e:
        print(f"✗ {e}", file=sys.stderr)
        for violation in e.violations:
            print(f"  {violation.axiom}: {violation.message}", file=sys.stderr)
        return EXIT_FAILURE
    except _USAGE_ERRORS as e:
        print(f"✗ {e}", file=sys.stderr)
        return EXIT_USAGE


def _print_json(document: Any) -> None:
    print(json.dumps(document, indent=2, ensure_ascii=False))


def _cmd_check(path: str, convention: Convention | None, quandle: bool) -> int:
    """Validate a rack file and list violated identities."""
    table = load_rack_file(path, convention)
    result = validate_rack(table)
    violations = result if isinstance(result, list) else []
    if not violations and quandle:
        assert isinstance(result, FiniteRack)
        quandle_result = validate_quandle(result)
        violations = quandle_result if isinstance(quandle_result, list) else []

    _print_json(
        {
            "path": path,
            "size": table.size,
            "valid": not violations,
            "checked": "quandle" if quandle else "rack",
            "violations": [v.to_dict() for v in violations],
        }
    )
    if violations:
        print(f"✗ {path}: {len(violations)} violations", file=sys.stderr)
        for v in violations:
            print(f"  {v.axiom}: {v.message}", file=sys.stderr)
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_family(name: str, params: list[int]) -> int:
    _print_json(dump_rack(build_family(name, params).table))
    return EXIT_OK


def _load_rack(path: str, convention: Convention | None) -> FiniteRack:
    return FiniteRack.from_table(load_rack_file(path, convention))


def _describe(path: str, rack: FiniteRack) -> InputDescriptor:
    return InputDescriptor(
        source=path,
        size=rack.size,
        is_quandle=rack.is_quandle(),
        orbit_count=orbits(rack).orbit_count,
    )


def _bundle(rack: FiniteRack, max_degree: int, metrics: RunMetrics) -> RackComplexBundle:
    config = load_config()
    bundle = build_bundle(rack, max_degree, config.basis_budget)
    for complex_ in (bundle.cr, bundle.cd, bundle.cq):
        if complex_ is not None:
            complex_.metrics = metrics
    return bundle


def _entries(groups: Sequence[AbelianGroupPresentation], offset: int = 0) -> list[GroupEntry]:
    return [GroupEntry.from_presentation(n + offset, g) for n, g in enumerate(groups)]


def _cmd_groups(args: argparse.Namespace) -> int:
    """Homology or cohomology in degrees 0..max_degree."""
    if args.max_degree < 0:
        raise PreconditionError(f"--max-degree must be non-negative, got {args.max_degree}")
    coeff = CoefficientSpec.parse(args.coeff)
    rack = _load_rack(args.path, args.convention)
    metrics = RunMetrics()
    metrics.start()
    bundle = _bundle(rack, args.max_degree, metrics)
    compute = homology if args.command == "homology" else cohomology
    groups = compute(rack, args.theory, args.max_degree, coeff, bundle)
    metrics.stop()
    document = ResultDocument(
        input=_describe(args.path, rack),
        theory=args.theory,
        kind=args.command,
        coefficient=str(coeff),
        degrees=list(range(args.max_degree + 1)),
        groups=_entries(groups),
        timing=metrics.to_dict(),
    )
    print(document.to_json())
    return EXIT_OK


def _cmd_quillen(args: argparse.Namespace) -> int:
    """D⁰..Dᴺ beside the cohomology groups H¹..H^{N+1} they are read from."""
    if args.max_degree < 0:
        raise PreconditionError(f"--max-degree must be non-negative, got {args.max_degree}")
    coeff = CoefficientSpec.parse(args.coeff)
    rack = _load_rack(args.path, args.convention)
    metrics = RunMetrics()
    metrics.start()
    bundle = _bundle(rack, args.max_degree + 1, metrics)
    shifted = cohomology(rack, args.theory, args.max_degree + 1, coeff, bundle)[1:]
    metrics.stop()
    document = ResultDocument(
        input=_describe(args.path, rack),
        theory=args.theory,
        kind="quillen",
        coefficient=str(coeff),
        degrees=list(range(args.max_degree + 1)),
        groups=_entries(shifted),
        shifted_from=_entries(shifted, offset=1),
        timing=metrics.to_dict(),
    )
    print(document.to_json())
    return EXIT_OK


def _cmd_cocycles(args: argparse.Namespace) -> int:
    coeff = CoefficientSpec.parse(args.coeff)
    rack = _load_rack(args.path, args.convention)
    check_budget(rack.size, 3, load_config().basis_budget)
    basis = two_cocycles(rack, coeff, args.theory)
    body = basis.to_dict()
    order = basis.group.order
    _print_json(
        {
            "input": _describe(args.path, rack).model_dump(),
            **body,
            "order": None if order is None else exact_int(order),
        }
    )
    return EXIT_OK


def _verify_config(config_path: str | None, max_degree: int | None) -> RackhomConfig:
    config = load_config(config_path)
    if max_degree is not None:
        # The override applies to every rack, small ones included.
        config = RackhomConfig(
            **{**config.model_dump(), "max_degree": max_degree, "small_rack_degree": max_degree}
        )
    for spec in config.corpus:
        rack = build_family(spec.family, spec.params)
        check_budget(rack.size, config.chain_degree_for(rack.size), config.basis_budget)
    return config


def _cmd_verify(
    config_path: str | None, max_degree: int | None, checks: list[str] | None
) -> int:
    config = _verify_config(config_path, max_degree)
    if config.log_json:
        set_verbosity(logging.getLogger("rackhom").level, json_format=True)
    suite = VerificationSuite(config, build_checks(checks))
    report = suite.run()
    _print_json(report.to_dict())
    if not report.passed:
        failed = [r.name for r in report.results if not r.passed]
        print(f"✗ Verification failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_FAILURE
    print(f"✓ All {len(report.results)} checks passed", file=sys.stderr)
    return EXIT_OK
