"""Machine-readable verification summary"""

from pydantic import BaseModel, ConfigDict, computed_field


class PairVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    id_a: int
    id_b: int
    separator: str | None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def separated(self) -> bool:
        return self.separator is not None


class VerifySummary(BaseModel):
    """Every pair of distinct catalog groups with the invariant that separated it"""

    model_config = ConfigDict(frozen=True)

    group_order: int
    group_count: int
    calibration: str
    pairs: tuple[PairVerdict, ...]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def pair_count(self) -> int:
        return len(self.pairs)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def separator_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for pair in self.pairs:
            key = pair.separator or "none"
            counts[key] = counts.get(key, 0) + 1
        return dict(sorted(counts.items()))

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(pair.separated for pair in self.pairs)

    @property
    def failures(self) -> list[PairVerdict]:
        return [pair for pair in self.pairs if not pair.separated]


def render_verify(summary: VerifySummary) -> str:
    """Verdict line, one line per unseparated pair, then the summary as JSON"""
    verdict = "PASS" if summary.passed else "FAIL"
    header = f"{verdict}: order {summary.group_order}, {summary.group_count} groups, "
    header += f"{summary.pair_count} pairs"
    lines = [header]
    for failure in summary.failures:
        lines.append(f"FAIL: groups {failure.id_a} and {failure.id_b} have isomorphic tables")
    lines.append(summary.model_dump_json(indent=2))
    return "\n".join(lines) + "\n"
