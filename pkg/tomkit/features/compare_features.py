from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from tomkit.compare.calibration import AxisCalibration
from tomkit.compare.comparison import Axis, ComparisonTable, comparison_rows
from tomkit.compare.decider import IsoVerdict, is_isomorphic
from tomkit.compare.fingerprint import Fingerprint, fingerprint
from tomkit.compare.scan import DistinguishStep, distinguish_report, separator
from tomkit.ddd import WorkerCount
from tomkit.marks.table import MarksMatrix
from tomkit.report.comparison_report import ReportFormat, render_comparison
from tomkit.tomkit_abstractions import DataTransferObject, Feature
from tomkit.tomkit_logger import logger


class CmdFingerprint(DataTransferObject):
    table: MarksMatrix


class ResFingerprint(DataTransferObject):
    fingerprint: Fingerprint


class FingerprintFeature(Feature[CmdFingerprint, ResFingerprint]):
    def execute(self, dto: CmdFingerprint) -> ResFingerprint:
        return ResFingerprint(fingerprint=fingerprint(dto.table))


class CmdDecideIsomorphism(DataTransferObject):
    table_a: MarksMatrix
    table_b: MarksMatrix
    fingerprints: tuple[Fingerprint, Fingerprint] | None = None


class ResIsoVerdict(DataTransferObject):
    verdict: IsoVerdict


class DecideIsomorphismFeature(Feature[CmdDecideIsomorphism, ResIsoVerdict]):
    def execute(self, dto: CmdDecideIsomorphism) -> ResIsoVerdict:
        return ResIsoVerdict(
            verdict=is_isomorphic(dto.table_a, dto.table_b, dto.fingerprints)
        )


class CmdDistinguish(DataTransferObject):
    table_a: MarksMatrix
    table_b: MarksMatrix
    calibration: AxisCalibration
    exact: bool = False
    fingerprints: tuple[Fingerprint, Fingerprint] | None = None


class ResDistinguish(DataTransferObject):
    steps: list[DistinguishStep]
    separator: str | None


class DistinguishFeature(Feature[CmdDistinguish, ResDistinguish]):
    """Cheapest invariant that tells two tables apart, the exact decider last"""

    def execute(self, dto: CmdDistinguish) -> ResDistinguish:
        steps = distinguish_report(
            dto.table_a, dto.table_b, dto.calibration, dto.exact, dto.fingerprints
        )
        return ResDistinguish(steps=steps, separator=separator(steps))


_shared: dict = {}


def _share_pair_inputs(
    tables: Sequence[MarksMatrix],
    fingerprints: Sequence[Fingerprint],
    calibration: AxisCalibration,
    exact: bool,
) -> None:
    """Pool initializer: every worker receives the tables once"""
    _shared.update(
        tables=tables, fingerprints=fingerprints, calibration=calibration, exact=exact
    )


def distinguish_shared_pair(pair: tuple[int, int]) -> str | None:
    """Worker entry point: separator of two positions in the shared tables"""
    i, j = pair
    tables, fps = _shared["tables"], _shared["fingerprints"]
    steps = distinguish_report(
        tables[i], tables[j], _shared["calibration"], _shared["exact"], (fps[i], fps[j])
    )
    return separator(steps)


class CmdDistinguishPairs(DataTransferObject):
    tables: list[MarksMatrix]
    fingerprints: list[Fingerprint]
    pairs: list[tuple[int, int]]
    calibration: AxisCalibration
    exact: bool = False
    threads: WorkerCount | None = None


class ResDistinguishPairs(DataTransferObject):
    separators: list[str | None]


class DistinguishPairsFeature(Feature[CmdDistinguishPairs, ResDistinguishPairs]):
    """Separators of many position pairs, in pair order.

    Pairs are spread over worker processes; the result does not depend on the
    worker count.
    """

    def execute(self, dto: CmdDistinguishPairs) -> ResDistinguishPairs:
        inputs = (dto.tables, dto.fingerprints, dto.calibration, dto.exact)
        workers = min(dto.threads or 1, len(dto.pairs))
        if workers > 1:
            chunksize = max(1, len(dto.pairs) // (4 * workers))
            logger.debug(
                f"{len(dto.pairs)} pairs on {workers} workers, chunks of {chunksize}"
            )
            with ProcessPoolExecutor(
                max_workers=workers, initializer=_share_pair_inputs, initargs=inputs
            ) as pool:
                separators = list(
                    pool.map(distinguish_shared_pair, dto.pairs, chunksize=chunksize)
                )
        else:
            _share_pair_inputs(*inputs)
            try:
                separators = [distinguish_shared_pair(pair) for pair in dto.pairs]
            finally:
                _shared.clear()
        return ResDistinguishPairs(separators=separators)


class CmdRenderComparison(DataTransferObject):
    table_a: MarksMatrix
    table_b: MarksMatrix
    printed_axis: Axis
    calibration: AxisCalibration
    format: ReportFormat = "latex"


class ResComparison(DataTransferObject):
    comparison: ComparisonTable
    report: str


class RenderComparisonFeature(Feature[CmdRenderComparison, ResComparison]):
    def execute(self, dto: CmdRenderComparison) -> ResComparison:
        internal = dto.calibration.internal_axis(dto.printed_axis)
        comparison = comparison_rows(dto.table_a, dto.table_b, internal)
        report = render_comparison(comparison, dto.printed_axis, dto.calibration, dto.format)
        return ResComparison(comparison=comparison, report=report)
