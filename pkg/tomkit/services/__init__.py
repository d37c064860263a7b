from tomkit.services.calibrate_service import CalibrateService, CmdCalibrate, ResCalibration
from tomkit.services.compare_service import CmdCompareGroups, CompareGroupsService
from tomkit.services.decide_service import (
    CmdDecideGroups,
    DecideGroupsService,
    ResDecideGroups,
)
from tomkit.services.invariants_service import (
    CmdShowInvariants,
    ResInvariants,
    ShowInvariantsService,
)
from tomkit.services.scan_service import CmdScanCatalog, ResScan, ScanCatalogService
from tomkit.services.verify_service import CmdVerifyCatalog, ResVerify, VerifyCatalogService

__all__ = [
    "CalibrateService",
    "CmdCalibrate",
    "CmdCompareGroups",
    "CmdDecideGroups",
    "CmdScanCatalog",
    "CmdShowInvariants",
    "CmdVerifyCatalog",
    "CompareGroupsService",
    "DecideGroupsService",
    "ResCalibration",
    "ResDecideGroups",
    "ResInvariants",
    "ResScan",
    "ResVerify",
    "ScanCatalogService",
    "ShowInvariantsService",
    "VerifyCatalogService",
]
