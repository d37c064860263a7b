import os

import pytest

from tomkit.compare import AxisCalibration, fingerprint
from tomkit.exceptions import UnknownGroup
from tomkit.features import (
    CmdComputeMarks,
    CmdComputeTables,
    CmdDecideIsomorphism,
    CmdDistinguishPairs,
    CmdLoadCatalog,
    ResCatalog,
    ResDistinguishPairs,
    ResIsoVerdict,
    ResMarks,
    ResTables,
)
from tomkit.marks import table_of_marks


def test_load_catalog(tomkit_app):
    res = tomkit_app(CmdLoadCatalog(order=8), ResCatalog)
    assert [r.catalog_id for r in res.records] == [1, 2, 3, 4, 5]


def test_compute_marks_then_read_from_cache(tomkit_app, s3_group):
    first = tomkit_app(CmdComputeMarks(order=6, catalog_id=1), ResMarks)
    assert not first.from_cache
    assert os.path.isfile(first.cache_path)
    assert first.table.rows() == table_of_marks(s3_group).rows()

    second = tomkit_app(CmdComputeMarks(order=6, catalog_id=1), ResMarks)
    assert second.from_cache
    assert second.table == first.table


def test_compute_marks_without_cache(tomkit_app, tmp_settings):
    res = tomkit_app(CmdComputeMarks(order=4, catalog_id=2, use_cache=False), ResMarks)
    assert res.cache_path is None
    assert not os.path.exists(tmp_settings.cache_dir)


def test_unknown_group(tomkit_app):
    with pytest.raises(UnknownGroup):
        tomkit_app(CmdComputeMarks(order=8, catalog_id=9), ResMarks)


def test_non_positive_order_is_rejected(tomkit_app):
    with pytest.raises(ValueError):
        tomkit_app(CmdComputeMarks(order=0, catalog_id=1), ResMarks)


def test_compute_tables_keeps_catalog_order(tomkit_app):
    res = tomkit_app(CmdComputeTables(order=12), ResTables)
    assert [t.catalog_id for t in res.tables] == [1, 2, 3, 4, 5]
    assert all(t.group_order == 12 for t in res.tables)


def test_worker_count_does_not_change_tables(tomkit_app, bundled_repository):
    res = tomkit_app(CmdComputeTables(order=8, threads=2, use_cache=False), ResTables)
    expected = [table_of_marks(r.build()) for r in bundled_repository.records(8)]
    assert res.tables == expected


def test_decide_isomorphism_feature(tomkit_app):
    tables = tomkit_app(CmdComputeTables(order=4), ResTables).tables
    same = CmdDecideIsomorphism(table_a=tables[0], table_b=tables[0])
    assert tomkit_app(same, ResIsoVerdict).verdict.isomorphic
    other = CmdDecideIsomorphism(table_a=tables[0], table_b=tables[1])
    assert not tomkit_app(other, ResIsoVerdict).verdict.isomorphic


def test_distinguish_pairs_does_not_depend_on_workers(tomkit_app):
    tables = tomkit_app(CmdComputeTables(order=12), ResTables).tables
    tables = tables + tables[:1]
    pairs = [(i, j) for i in range(len(tables)) for j in range(i + 1, len(tables))]
    calibration = AxisCalibration(printed_columns_axis="rows", method="structural")

    results = []
    for threads in (1, 3):
        res = tomkit_app(
            CmdDistinguishPairs(
                tables=tables,
                fingerprints=[fingerprint(t) for t in tables],
                pairs=pairs,
                calibration=calibration,
                threads=threads,
            ),
            ResDistinguishPairs,
        )
        results.append(res.separators)

    assert results[0] == results[1]
    assert len(results[0]) == 15
    assert [pairs[k] for k, s in enumerate(results[0]) if s is None] == [(0, 5)]
