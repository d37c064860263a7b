from tomkit.compare.decider import IsoVerdict
from tomkit.compare.scan import DistinguishStep
from tomkit.ddd import CatalogId, GroupOrder
from tomkit.features.compare_features import (
    CmdDecideIsomorphism,
    CmdDistinguish,
    CmdFingerprint,
    ResDistinguish,
    ResFingerprint,
    ResIsoVerdict,
)
from tomkit.features.marks_features import CmdComputeMarks, ResMarks
from tomkit.services.calibrate_service import CalibratedService
from tomkit.tomkit_abstractions import DataTransferObject


class CmdDecideGroups(DataTransferObject):
    order: GroupOrder
    id_a: CatalogId
    id_b: CatalogId


class ResDecideGroups(DataTransferObject):
    steps: list[DistinguishStep]
    verdict: IsoVerdict
    report: str


def render_decision(
    label_a: tuple[int, int],
    label_b: tuple[int, int],
    steps: list[DistinguishStep],
    verdict: IsoVerdict,
    orientation: str,
) -> str:
    lines = [f"# orientation: {orientation}", f"groups {label_a} and {label_b}"]
    for step in steps:
        if step.invariant != "exact":
            lines.append(f"{step.invariant}: {'equal' if step.equal else 'differ'}")
    if verdict.isomorphic:
        assert verdict.witness is not None
        lines.append("exact: isomorphic, witness " + " ".join(map(str, verdict.witness)))
    elif verdict.certificate:
        lines.append(f"exact: not isomorphic, certificate {verdict.certificate}")
    else:
        lines.append("exact: not isomorphic, refinement")
    return "\n".join(lines) + "\n"


class DecideGroupsService(CalibratedService[CmdDecideGroups, ResDecideGroups]):
    """Invariant escalation of two catalog groups, always followed by the exact decider"""

    def execute(self, dto: CmdDecideGroups) -> ResDecideGroups:
        tables, fingerprints = [], []
        for catalog_id in (dto.id_a, dto.id_b):
            marks = self.feature_bus.execute(
                CmdComputeMarks(order=dto.order, catalog_id=catalog_id), ResMarks
            )
            assert marks is not None
            res = self.feature_bus.execute(CmdFingerprint(table=marks.table), ResFingerprint)
            assert res is not None
            tables.append(marks.table)
            fingerprints.append(res.fingerprint)
        pair_fingerprints = (fingerprints[0], fingerprints[1])
        calibration = self.calibrate(tables[0])

        distinguished = self.feature_bus.execute(
            CmdDistinguish(
                table_a=tables[0],
                table_b=tables[1],
                calibration=calibration,
                fingerprints=pair_fingerprints,
            ),
            ResDistinguish,
        )
        assert distinguished is not None
        decided = self.feature_bus.execute(
            CmdDecideIsomorphism(
                table_a=tables[0], table_b=tables[1], fingerprints=pair_fingerprints
            ),
            ResIsoVerdict,
        )
        assert decided is not None

        report = render_decision(
            (dto.order, dto.id_a),
            (dto.order, dto.id_b),
            distinguished.steps,
            decided.verdict,
            calibration.describe(),
        )
        return ResDecideGroups(
            steps=distinguished.steps, verdict=decided.verdict, report=report
        )
