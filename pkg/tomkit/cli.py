"""Command line surface: compute, scan, compare, decide, verify, invariants,
calibrate and catalog.

Exit codes: 0 PASS, 1 mathematical failure, 2 usage, input or I/O error.
"""

import argparse
import sys
from typing import Sequence

from tomkit.app import build_tomkit
from tomkit.catalog.catalog_format import write_catalog
from tomkit.catalog.marks_format import write_marks
from tomkit.error_handler import EXIT_PASS, exit_code_for
from tomkit.exceptions import VerificationFailed
from tomkit.features.compare_features import ResComparison
from tomkit.features.marks_features import (
    CmdComputeMarks,
    CmdLoadCatalog,
    ResCatalog,
    ResMarks,
)
from tomkit.services import (
    CmdCalibrate,
    CmdCompareGroups,
    CmdDecideGroups,
    CmdScanCatalog,
    CmdShowInvariants,
    CmdVerifyCatalog,
    ResCalibration,
    ResDecideGroups,
    ResInvariants,
    ResScan,
    ResVerify,
)
from tomkit.tomkit_conf import TomkitSettings, settings
from tomkit.tomkit_logger import logger
from tomkit.use_tomkit import UseTomkit


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="catalog directory or single catalog file")
    common.add_argument("--cache", help="directory of cached marks tables")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="tomkit", description="Tables of marks of small groups and their invariants"
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    compute = verbs.add_parser("compute", parents=[common], help="compute one table of marks")
    compute.add_argument("--order", type=_positive, required=True)
    compute.add_argument("--id", type=_positive, required=True, dest="catalog_id")

    scan = verbs.add_parser("scan", parents=[common], help="groups with equal entries")
    scan.add_argument("--order", type=_positive, required=True)
    scan.add_argument("--format", choices=["latex", "tsv"], default="latex")
    scan.add_argument("--threads", type=_positive)

    compare = verbs.add_parser("compare", parents=[common], help="row or column table")
    compare.add_argument("id_a", type=_positive)
    compare.add_argument("id_b", type=_positive)
    compare.add_argument("--order", type=_positive, default=64)
    compare.add_argument("--axis", choices=["rows", "columns"], default="columns")
    compare.add_argument("--format", choices=["latex", "tsv"], default="latex")

    decide = verbs.add_parser("decide", parents=[common], help="exact isomorphism test")
    decide.add_argument("id_a", type=_positive)
    decide.add_argument("id_b", type=_positive)
    decide.add_argument("--order", type=_positive, default=64)

    verify = verbs.add_parser("verify", parents=[common], help="separate every pair")
    verify.add_argument("--order", type=_positive, required=True)
    verify.add_argument("--threads", type=_positive)
    verify.add_argument(
        "--exact", action="store_true", help="run the exact decider on every pair"
    )

    invariants = verbs.add_parser(
        "invariants", parents=[common], help="invariants of one group"
    )
    invariants.add_argument("--order", type=_positive, required=True)
    invariants.add_argument("--id", type=_positive, required=True, dest="catalog_id")
    invariants.add_argument(
        "--check-oracle", action="store_true", help="cross-check marks by coset scanning"
    )

    verbs.add_parser("calibrate", parents=[common], help="printed axis orientation")

    catalog = verbs.add_parser("catalog", parents=[common], help="validated catalog records")
    catalog.add_argument("--order", type=_positive, required=True)
    return parser


def _settings_for(args: argparse.Namespace) -> TomkitSettings:
    updates = {}
    if args.catalog:
        updates["catalog_dir"] = args.catalog
    if args.cache:
        updates["cache_dir"] = args.cache
    return settings.model_copy(update=updates)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def run(args: argparse.Namespace, tomkit: UseTomkit) -> int:
    match args.verb:
        case "compute":
            marks = tomkit(
                CmdComputeMarks(order=args.order, catalog_id=args.catalog_id), ResMarks
            )
            assert marks is not None
            _emit(write_marks(marks.table), args.out)

        case "scan":
            scanned = tomkit(
                CmdScanCatalog(order=args.order, threads=args.threads, format=args.format),
                ResScan,
            )
            assert scanned is not None
            _emit(scanned.report, args.out)

        case "compare":
            compared = tomkit(
                CmdCompareGroups(
                    order=args.order,
                    id_a=args.id_a,
                    id_b=args.id_b,
                    axis=args.axis,
                    format=args.format,
                ),
                ResComparison,
            )
            assert compared is not None
            _emit(compared.report, args.out)

        case "decide":
            decided = tomkit(
                CmdDecideGroups(order=args.order, id_a=args.id_a, id_b=args.id_b),
                ResDecideGroups,
            )
            assert decided is not None
            _emit(decided.report, args.out)
            if decided.verdict.isomorphic and args.id_a != args.id_b:
                raise VerificationFailed(
                    f"Groups {args.id_a} and {args.id_b} of order {args.order} "
                    "have isomorphic tables of marks",
                    pair=(args.id_a, args.id_b),
                )

        case "calibrate":
            calibrated = tomkit(CmdCalibrate(), ResCalibration)
            assert calibrated is not None
            _emit(calibrated.calibration.describe() + "\n", args.out)

        case "catalog":
            loaded = tomkit(CmdLoadCatalog(order=args.order), ResCatalog)
            assert loaded is not None
            _emit(write_catalog(loaded.records), args.out)

        case "verify":
            verified = tomkit(
                CmdVerifyCatalog(order=args.order, threads=args.threads, exact=args.exact),
                ResVerify,
            )
            assert verified is not None
            _emit(verified.report, args.out)
            if not verified.summary.passed:
                first = verified.summary.failures[0]
                raise VerificationFailed(
                    f"Groups {first.id_a} and {first.id_b} of order {args.order} "
                    "have isomorphic tables of marks",
                    pair=(first.id_a, first.id_b),
                )

        case "invariants":
            shown = tomkit(
                CmdShowInvariants(
                    order=args.order,
                    catalog_id=args.catalog_id,
                    check_oracle=args.check_oracle,
                ),
                ResInvariants,
            )
            assert shown is not None
            _emit(shown.report, args.out)
            if shown.oracle is not None and shown.oracle.disagreements:
                raise VerificationFailed(
                    f"{len(shown.oracle.disagreements)} marks disagree with the coset scan"
                )

    return EXIT_PASS


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args, build_tomkit(_settings_for(args)))
    except Exception as error:
        code = exit_code_for(error)
        logger.error(f"{type(error).__name__}: {error}")
        sys.stderr.write(f"tomkit: {error}\n")
        return code


if __name__ == "__main__":
    sys.exit(main())
