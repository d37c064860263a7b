import numpy as np

from tomkit.catalog.repository import CatalogRepository
from tomkit.compare.fingerprint import Fingerprint
from tomkit.ddd import CatalogId, GroupOrder
from tomkit.features.compare_features import CmdFingerprint, ResFingerprint
from tomkit.features.marks_features import CmdComputeMarks, ResMarks
from tomkit.lattice.subgroups import conjugacy_classes_of_subgroups
from tomkit.marks.table import MarksMatrix, class_pairs_disagreeing
from tomkit.report.invariants_report import OracleCheck, render_invariants
from tomkit.tomkit_abstractions import ApplicationService, DataTransferObject
from tomkit.tomkit_conf import TomkitSettings
from tomkit.tomkit_logger import logger

EXHAUSTIVE_ORACLE_ORDER = 16


class CmdShowInvariants(DataTransferObject):
    order: GroupOrder
    catalog_id: CatalogId
    check_oracle: bool = False


class ResInvariants(DataTransferObject):
    table: MarksMatrix
    fingerprint: Fingerprint
    oracle: OracleCheck | None = None
    report: str


class ShowInvariantsService(ApplicationService[CmdShowInvariants, ResInvariants]):
    """Fingerprint of one catalog group, optionally cross-checked by the coset scan.

    Up to order 16 every class pair is checked; above it a seeded sample of
    oracle_sample_pairs pairs.
    """

    catalog_repository: CatalogRepository
    settings: TomkitSettings

    def _oracle_pairs(self, order: int, n: int) -> list[tuple[int, int]]:
        if order <= EXHAUSTIVE_ORACLE_ORDER or n * n <= self.settings.oracle_sample_pairs:
            return [(i, j) for i in range(n) for j in range(n)]
        rng = np.random.default_rng(self.settings.random_seed)
        flat = rng.choice(n * n, size=self.settings.oracle_sample_pairs, replace=False)
        return sorted((int(k) // n, int(k) % n) for k in flat)

    def _oracle_check(self, dto: CmdShowInvariants, table: MarksMatrix) -> OracleCheck:
        group = self.catalog_repository.group(dto.order, dto.catalog_id)
        classes = conjugacy_classes_of_subgroups(group, self.settings.subgroup_bound)
        pairs = self._oracle_pairs(dto.order, len(classes))
        disagreements = class_pairs_disagreeing(group, classes, pairs, table)
        if disagreements:
            logger.error(
                f"Group ({dto.order}, {dto.catalog_id}): {len(disagreements)} marks "
                "disagree with the coset scan"
            )
        return OracleCheck(pairs_checked=len(pairs), disagreements=tuple(disagreements))

    def execute(self, dto: CmdShowInvariants) -> ResInvariants:
        marks = self.feature_bus.execute(
            CmdComputeMarks(order=dto.order, catalog_id=dto.catalog_id), ResMarks
        )
        assert marks is not None
        res = self.feature_bus.execute(CmdFingerprint(table=marks.table), ResFingerprint)
        assert res is not None
        oracle = self._oracle_check(dto, marks.table) if dto.check_oracle else None
        return ResInvariants(
            table=marks.table,
            fingerprint=res.fingerprint,
            oracle=oracle,
            report=render_invariants(marks.table, res.fingerprint, oracle),
        )
