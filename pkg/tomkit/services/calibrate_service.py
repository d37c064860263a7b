from tomkit.catalog.repository import CatalogRepository
from tomkit.compare.calibration import (
    CALIBRATION_PAIR,
    AxisCalibration,
    calibrate_orientation,
)
from tomkit.exceptions import UnknownGroup
from tomkit.features.marks_features import CmdComputeMarks, ResMarks
from tomkit.group.finite_group import build_group
from tomkit.group.permutation import Permutation
from tomkit.marks.table import MarksMatrix, table_of_marks
from tomkit.tomkit_abstractions import (
    ApplicationService,
    DataTransferObject,
    TypeDTO,
    TypeDTOResponse,
)
from tomkit.tomkit_logger import logger

CALIBRATION_ORDER = 64


class CalibratedService(ApplicationService[TypeDTO, TypeDTOResponse]):
    """Base for services that read printed axis names.

    Calibrates against the golden tables when the order-64 catalog is reachable,
    structurally otherwise.
    """

    catalog_repository: CatalogRepository

    def _golden_tables(self) -> tuple[MarksMatrix, MarksMatrix] | None:
        try:
            for catalog_id in CALIBRATION_PAIR:
                self.catalog_repository.record(CALIBRATION_ORDER, catalog_id)
        except UnknownGroup:
            return None
        tables = []
        for catalog_id in CALIBRATION_PAIR:
            res = self.feature_bus.execute(
                CmdComputeMarks(order=CALIBRATION_ORDER, catalog_id=catalog_id), ResMarks
            )
            assert res is not None
            tables.append(res.table)
        return tables[0], tables[1]

    def calibrate(self, fallback_table: MarksMatrix | None = None) -> AxisCalibration:
        golden = self._golden_tables()
        if golden is not None:
            calibration = calibrate_orientation(*golden)
        else:
            if fallback_table is None or fallback_table.n < 2:
                cyclic_2 = build_group([Permutation.from_images([1, 0])])
                fallback_table = table_of_marks(cyclic_2)
            calibration = calibrate_orientation(fallback=fallback_table)
        logger.info(f"Orientation: {calibration.describe()}")
        return calibration


class CmdCalibrate(DataTransferObject):
    fallback_table: MarksMatrix | None = None


class ResCalibration(DataTransferObject):
    calibration: AxisCalibration


class CalibrateService(CalibratedService[CmdCalibrate, ResCalibration]):
    def execute(self, dto: CmdCalibrate) -> ResCalibration:
        return ResCalibration(calibration=self.calibrate(dto.fallback_table))
