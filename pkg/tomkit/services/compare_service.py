from tomkit.compare.comparison import Axis
from tomkit.ddd import CatalogId, GroupOrder
from tomkit.features.compare_features import CmdRenderComparison, ResComparison
from tomkit.features.marks_features import CmdComputeMarks, ResMarks
from tomkit.report.comparison_report import ReportFormat
from tomkit.services.calibrate_service import CalibratedService
from tomkit.tomkit_abstractions import DataTransferObject


class CmdCompareGroups(DataTransferObject):
    order: GroupOrder
    id_a: CatalogId
    id_b: CatalogId
    axis: Axis = "columns"
    format: ReportFormat = "latex"


class CompareGroupsService(CalibratedService[CmdCompareGroups, ResComparison]):
    """Comparison table of two catalog groups along a printed axis name"""

    def execute(self, dto: CmdCompareGroups) -> ResComparison:
        tables = []
        for catalog_id in (dto.id_a, dto.id_b):
            res = self.feature_bus.execute(
                CmdComputeMarks(order=dto.order, catalog_id=catalog_id), ResMarks
            )
            assert res is not None
            tables.append(res.table)

        rendered = self.feature_bus.execute(
            CmdRenderComparison(
                table_a=tables[0],
                table_b=tables[1],
                printed_axis=dto.axis,
                calibration=self.calibrate(tables[0]),
                format=dto.format,
            ),
            ResComparison,
        )
        assert rendered is not None
        return rendered
