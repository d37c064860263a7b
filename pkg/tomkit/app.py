"""Registers every command of the verifier on a fresh UseTomkit instance"""

from tomkit import features as f
from tomkit import services as s
from tomkit.tomkit_conf import TomkitSettings
from tomkit.use_tomkit import UseTomkit

FEATURES = [
    (f.CmdLoadCatalog, f.LoadCatalogFeature),
    (f.CmdComputeMarks, f.ComputeMarksFeature),
    (f.CmdComputeTables, f.ComputeTablesFeature),
    (f.CmdFingerprint, f.FingerprintFeature),
    (f.CmdDecideIsomorphism, f.DecideIsomorphismFeature),
    (f.CmdDistinguish, f.DistinguishFeature),
    (f.CmdDistinguishPairs, f.DistinguishPairsFeature),
    (f.CmdRenderComparison, f.RenderComparisonFeature),
]

APP_SERVICES = [
    (s.CmdCalibrate, s.CalibrateService),
    (s.CmdScanCatalog, s.ScanCatalogService),
    (s.CmdCompareGroups, s.CompareGroupsService),
    (s.CmdDecideGroups, s.DecideGroupsService),
    (s.CmdVerifyCatalog, s.VerifyCatalogService),
    (s.CmdShowInvariants, s.ShowInvariantsService),
]


def build_tomkit(settings: TomkitSettings | None = None, **kwargs) -> UseTomkit:
    tomkit = UseTomkit("tomkit", settings=settings, **kwargs)
    for dto, feature in FEATURES:
        tomkit.feature(dto)(feature)
    for dto, app_service in APP_SERVICES:
        tomkit.app_service(dto)(app_service)
    return tomkit
