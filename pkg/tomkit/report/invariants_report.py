from pydantic import BaseModel, ConfigDict

from tomkit.compare.fingerprint import Fingerprint
from tomkit.marks.table import MarksMatrix


class OracleCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    pairs_checked: int
    disagreements: tuple[tuple[int, int], ...]


def render_invariants(
    table: MarksMatrix, fp: Fingerprint, oracle: OracleCheck | None = None
) -> str:
    order, catalog_id = table.label or ("-", "-")
    entries = " ".join(f"{value}:{mult}" for value, mult in fp.entries)
    orders = " ".join(f"{value}:{mult}" for value, mult in fp.class_order_profile)
    lines = [
        f"group {order} {catalog_id}",
        f"classes {table.n}",
        f"class_orders {orders}",
        f"entries {entries}",
        f"distinct_rows {len(fp.rows)}",
        f"distinct_columns {len(fp.columns)}",
    ]
    if oracle is not None:
        status = "ok" if not oracle.disagreements else "MISMATCH"
        lines.append(f"oracle {status} {oracle.pairs_checked} pairs checked")
        lines += [f"oracle_mismatch {i} {j}" for i, j in oracle.disagreements]
    return "".join(line + "\n" for line in lines)
