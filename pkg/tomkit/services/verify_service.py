import time
from math import comb

from tomkit.ddd import GroupOrder, WorkerCount
from tomkit.features.compare_features import (
    CmdDistinguishPairs,
    CmdFingerprint,
    ResDistinguishPairs,
    ResFingerprint,
)
from tomkit.features.marks_features import CmdComputeTables, ResTables
from tomkit.report.verify_report import PairVerdict, VerifySummary, render_verify
from tomkit.services.calibrate_service import CalibratedService
from tomkit.tomkit_abstractions import DataTransferObject
from tomkit.tomkit_logger import logger


class CmdVerifyCatalog(DataTransferObject):
    order: GroupOrder
    threads: WorkerCount | None = None
    exact: bool = False


class ResVerify(DataTransferObject):
    summary: VerifySummary
    report: str


class VerifyCatalogService(CalibratedService[CmdVerifyCatalog, ResVerify]):
    """Separate every pair of distinct groups of one order by their tables of marks.

    Each pair escalates entries, columns, rows and finally the exact decider;
    the summary passes iff no pair has isomorphic tables.
    """

    def execute(self, dto: CmdVerifyCatalog) -> ResVerify:
        computed = self.feature_bus.execute(
            CmdComputeTables(order=dto.order, threads=dto.threads), ResTables
        )
        assert computed is not None
        tables = computed.tables
        calibration = self.calibrate(tables[0] if tables else None)

        fingerprints = []
        for table in tables:
            res = self.feature_bus.execute(CmdFingerprint(table=table), ResFingerprint)
            assert res is not None
            fingerprints.append(res.fingerprint)

        started = time.perf_counter()
        pairs = [(i, j) for i in range(len(tables)) for j in range(i + 1, len(tables))]
        res_pairs = self.feature_bus.execute(
            CmdDistinguishPairs(
                tables=tables,
                fingerprints=fingerprints,
                pairs=pairs,
                calibration=calibration,
                exact=dto.exact,
                threads=dto.threads,
            ),
            ResDistinguishPairs,
        )
        assert res_pairs is not None

        verdicts = []
        for (i, j), pair_separator in zip(pairs, res_pairs.separators):
            id_a, id_b = tables[i].catalog_id, tables[j].catalog_id
            if pair_separator is None:
                logger.error(f"Groups {id_a} and {id_b} have isomorphic tables of marks")
            elif pair_separator != "entries":
                logger.info(f"Groups {id_a} and {id_b} separated by {pair_separator}")
            assert id_a is not None and id_b is not None
            verdicts.append(PairVerdict(id_a=id_a, id_b=id_b, separator=pair_separator))

        summary = VerifySummary(
            group_order=dto.order,
            group_count=len(tables),
            calibration=calibration.describe(),
            pairs=tuple(verdicts),
        )
        assert summary.pair_count == comb(len(tables), 2)
        logger.info(
            f"Order {dto.order}: {summary.pair_count} pairs compared in "
            f"{time.perf_counter() - started:.2f}s, separators {summary.separator_counts}"
        )
        return ResVerify(summary=summary, report=render_verify(summary))
