from tomkit.features.compare_features import (
    CmdDecideIsomorphism,
    CmdDistinguish,
    CmdDistinguishPairs,
    CmdFingerprint,
    CmdRenderComparison,
    DecideIsomorphismFeature,
    DistinguishFeature,
    DistinguishPairsFeature,
    FingerprintFeature,
    RenderComparisonFeature,
    ResComparison,
    ResDistinguish,
    ResDistinguishPairs,
    ResFingerprint,
    ResIsoVerdict,
)
from tomkit.features.marks_features import (
    CmdComputeMarks,
    CmdComputeTables,
    CmdLoadCatalog,
    ComputeMarksFeature,
    ComputeTablesFeature,
    LoadCatalogFeature,
    ResCatalog,
    ResMarks,
    ResTables,
    compute_record_table,
)

__all__ = [
    "CmdComputeMarks",
    "CmdComputeTables",
    "CmdDecideIsomorphism",
    "CmdDistinguish",
    "CmdDistinguishPairs",
    "CmdFingerprint",
    "CmdLoadCatalog",
    "CmdRenderComparison",
    "ComputeMarksFeature",
    "ComputeTablesFeature",
    "DecideIsomorphismFeature",
    "DistinguishFeature",
    "DistinguishPairsFeature",
    "FingerprintFeature",
    "LoadCatalogFeature",
    "RenderComparisonFeature",
    "ResCatalog",
    "ResComparison",
    "ResDistinguish",
    "ResDistinguishPairs",
    "ResFingerprint",
    "ResIsoVerdict",
    "ResMarks",
    "ResTables",
    "compute_record_table",
]
