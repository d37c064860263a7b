from tomkit.compare.calibration import AxisCalibration, calibrate_orientation
from tomkit.compare.comparison import ComparisonRow, ComparisonTable, comparison_rows
from tomkit.compare.decider import IsoVerdict, is_isomorphic, is_isomorphic_bruteforce
from tomkit.compare.fingerprint import Fingerprint, fingerprint
from tomkit.compare.scan import (
    DistinguishStep,
    distinguish_report,
    find_equal_entry_pairs,
    separator,
)

__all__ = [
    "AxisCalibration",
    "ComparisonRow",
    "ComparisonTable",
    "DistinguishStep",
    "Fingerprint",
    "IsoVerdict",
    "calibrate_orientation",
    "comparison_rows",
    "distinguish_report",
    "find_equal_entry_pairs",
    "fingerprint",
    "is_isomorphic",
    "is_isomorphic_bruteforce",
    "separator",
]
