"""End-to-end checks on the exported catalog of the 267 groups of order 64.

Skipped unless order_64.txt is present in TOMKIT_CATALOG_DIR; a full run
computes every table once and shares it through the marks cache.
"""

from math import comb

import numpy as np
import pytest

from tomkit import build_tomkit
from tomkit.catalog import read_marks, write_marks
from tomkit.compare import calibrate_orientation, distinguish_report, is_isomorphic, separator
from tomkit.compare.calibration import comparison_lines, golden_path, load_golden
from tomkit.compare.decider import witness_holds
from tomkit.features import CmdComputeTables, ResTables
from tomkit.lattice.subgroups import all_subgroups
from tomkit.marks import MarksMatrix
from tomkit.multiset import conjugate_matrix
from tomkit.services import (
    CmdScanCatalog,
    CmdShowInvariants,
    CmdVerifyCatalog,
    ResInvariants,
    ResScan,
    ResVerify,
)
from tomkit.tomkit_conf import TomkitSettings
from tests.fixtures import LARGE_CATALOG_DIR, requires_order_64

pytestmark = requires_order_64

ENTRY_EQUAL_PAIRS = [(15, 16), (47, 48), (106, 107), (179, 181), (236, 240)]
ELEMENTARY_ABELIAN_ID = 267


@pytest.fixture(scope="module")
def app_64(tmp_path_factory):
    settings = TomkitSettings(
        catalog_dir=LARGE_CATALOG_DIR, cache_dir=str(tmp_path_factory.mktemp("tom64"))
    )
    return build_tomkit(settings, log_after_execution=False)


@pytest.fixture(scope="module")
def tables_64(app_64) -> dict[int, MarksMatrix]:
    res = app_64(CmdComputeTables(order=64, threads=8), ResTables)
    return {table.catalog_id: table for table in res.tables}


@pytest.fixture(scope="module")
def calibration_64(tables_64):
    return calibrate_orientation(tables_64[15], tables_64[16])


def test_catalog_has_267_records(large_repository):
    records = large_repository.records(64)
    assert len(records) == 267
    assert [r.catalog_id for r in records] == list(range(1, 268))


def test_elementary_abelian_subgroup_count(large_repository):
    group = large_repository.group(64, ELEMENTARY_ABELIAN_ID)
    assert all(group.element_order(a) <= 2 for a in range(group.order))
    assert len(all_subgroups(group)) == 2825


def test_class_counts(tables_64):
    assert tables_64[15].n == tables_64[16].n == 27
    assert tables_64[236].n == tables_64[240].n == 118


def test_scan_reports_exactly_five_pairs(app_64, tables_64):
    res = app_64(CmdScanCatalog(order=64, format="tsv"), ResScan)
    assert res.pairs == ENTRY_EQUAL_PAIRS


def test_calibration_uses_the_golden_table(calibration_64):
    assert calibration_64.method == "golden"


@pytest.mark.parametrize("id_a, id_b", [(15, 16), (47, 48), (106, 107), (179, 181)])
def test_column_tables_match_goldens(tables_64, calibration_64, id_a, id_b):
    golden = load_golden(golden_path("columns", id_a, id_b))
    internal = calibration_64.internal_axis("columns")
    assert comparison_lines(tables_64[id_a], tables_64[id_b], internal) == golden.lines


def test_last_pair_agrees_on_columns_and_differs_on_rows(tables_64, calibration_64):
    a, b = tables_64[236], tables_64[240]
    columns = load_golden(golden_path("columns", 236, 240))
    rows = load_golden(golden_path("rows", 236, 240))

    column_lines = comparison_lines(a, b, calibration_64.internal_axis("columns"))
    assert column_lines == columns.lines
    assert len(column_lines) == 13
    assert all(in_a == in_b for _, in_a, in_b in column_lines)

    row_lines = comparison_lines(a, b, calibration_64.internal_axis("rows"))
    assert row_lines == rows.lines
    assert (((4, 4), (8, 3)), 8, 0) in row_lines
    assert (((2, 38),), 0, 8) in row_lines


def test_separators_of_the_five_pairs(tables_64, calibration_64):
    found = {
        (a, b): separator(distinguish_report(tables_64[a], tables_64[b], calibration_64))
        for a, b in ENTRY_EQUAL_PAIRS
    }
    assert found[(15, 16)] == "columns"
    assert found[(236, 240)] == "rows"
    assert None not in found.values()


def test_verify_passes(app_64):
    res = app_64(CmdVerifyCatalog(order=64), ResVerify)
    summary = res.summary
    assert summary.passed
    assert summary.pair_count == comb(267, 2) == 35_511
    assert summary.separator_counts.get("entries", 0) >= summary.pair_count - 5
    assert "exact" not in summary.separator_counts


def test_decider_finds_random_conjugates(tables_64):
    rng = np.random.default_rng(64)
    for catalog_id in (15, 16):
        table = tables_64[catalog_id]
        for _ in range(100):
            pi = rng.permutation(table.n).tolist()
            orders = [0] * table.n
            for i, target in enumerate(pi):
                orders[target] = table.class_orders[i]
            conjugated = MarksMatrix(conjugate_matrix(table.entries, pi), tuple(orders))
            verdict = is_isomorphic(table, conjugated)
            assert verdict.isomorphic
            assert witness_holds(table, conjugated, verdict.witness)


@pytest.mark.parametrize("catalog_id", [15, 236, ELEMENTARY_ABELIAN_ID])
def test_sampled_oracle_agrees(app_64, tables_64, catalog_id):
    res = app_64(
        CmdShowInvariants(order=64, catalog_id=catalog_id, check_oracle=True), ResInvariants
    )
    assert res.oracle.pairs_checked == min(1000, res.table.n**2)
    assert res.oracle.disagreements == ()


def test_marks_text_round_trips(tables_64):
    for table in tables_64.values():
        assert read_marks(write_marks(table)) == table
