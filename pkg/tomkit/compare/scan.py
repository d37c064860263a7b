from collections import defaultdict
from typing import Sequence

from pydantic import BaseModel, ConfigDict

from tomkit.compare.calibration import AxisCalibration
from tomkit.compare.decider import is_isomorphic
from tomkit.compare.fingerprint import Fingerprint, fingerprint
from tomkit.marks.table import MarksMatrix
from tomkit.multiset import Multiset, entries_invariant

ESCALATION = ("entries", "columns", "rows")


class DistinguishStep(BaseModel):
    model_config = ConfigDict(frozen=True)

    invariant: str
    equal: bool


def find_equal_entry_pairs(tables: Sequence[MarksMatrix]) -> list[tuple[int, int]]:
    """Positions (i, j), i < j, of tables with equal multisets of entries"""
    buckets: dict[Multiset, list[int]] = defaultdict(list)
    for position, table in enumerate(tables):
        buckets[entries_invariant(table)].append(position)
    pairs = [
        (members[x], members[y])
        for members in buckets.values()
        for x in range(len(members))
        for y in range(x + 1, len(members))
    ]
    return sorted(pairs)


def _component(fp: Fingerprint, printed_name: str, calibration: AxisCalibration) -> Multiset:
    if printed_name == "entries":
        return fp.entries
    internal = calibration.internal_axis(printed_name)  # type: ignore[arg-type]
    return fp.rows if internal == "rows" else fp.columns


def distinguish_report(
    a: MarksMatrix,
    b: MarksMatrix,
    calibration: AxisCalibration,
    exact: bool = False,
    fingerprints: tuple[Fingerprint, Fingerprint] | None = None,
) -> list[DistinguishStep]:
    """Escalate entries, columns, rows (printed axis names), then the exact decider.

    Stops at the first invariant that separates the tables; the exact decider
    runs when none does, or always when exact is set.
    """
    fp_a, fp_b = fingerprints or (fingerprint(a), fingerprint(b))
    steps: list[DistinguishStep] = []
    for name in ESCALATION:
        equal = _component(fp_a, name, calibration) == _component(fp_b, name, calibration)
        steps.append(DistinguishStep(invariant=name, equal=equal))
        if not equal:
            break
    if steps[-1].equal or exact:
        verdict = is_isomorphic(a, b, (fp_a, fp_b))
        steps.append(DistinguishStep(invariant="exact", equal=verdict.isomorphic))
    return steps


def separator(steps: Sequence[DistinguishStep]) -> str | None:
    """Name of the first separating invariant, None when the tables are isomorphic"""
    for step in steps:
        if not step.equal:
            return step.invariant
    return None
