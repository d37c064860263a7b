"""Build config objects from yaml"""

import os

import pytest

from tomkit.tomkit_conf import (
    BUNDLED_CATALOG_DIR,
    DEFAULT_CONFIG_FILE_PATH,
    TomkitConfig,
    TomkitSettings,
    build_config_obj,
)


def test_create_settings_from_section(test_conf_yaml_path: str):
    settings = build_config_obj(TomkitSettings, test_conf_yaml_path, "verifier")

    assert settings.tomkit_log_level == "DEBUG"
    assert settings.catalog_dir == "./catalogs"
    assert settings.closure_bound == 5000
    assert settings.threads == 4
    assert settings.subgroup_bound == 100_000


def test_create_nested_config_obj(test_conf_yaml_path: str):
    class GoldenConf(TomkitConfig):
        axis: str = "rows"
        token: str = "TOKEN EMPTY"

    class ReportingConf(TomkitConfig):
        formats: list[str] = ["latex"]
        golden: GoldenConf = GoldenConf()

    expected_load_env = "EXPECTED LOAD ENV"
    os.environ.setdefault("ANY_TOKEN", expected_load_env)

    reporting = build_config_obj(ReportingConf, test_conf_yaml_path, "reporting")
    assert reporting.formats == ["latex", "tsv"]
    assert reporting.golden.axis == "columns"
    assert reporting.golden.token == os.environ["ANY_TOKEN"]


def test_missing_section_raises(test_conf_yaml_path: str):
    with pytest.raises(ValueError, match="not_there"):
        build_config_obj(TomkitSettings, test_conf_yaml_path, "not_there")


def test_bundled_settings_defaults(monkeypatch):
    for name in ("TOMKIT_LOG_LEVEL", "TOMKIT_CATALOG_DIR", "TOMKIT_CACHE_DIR"):
        monkeypatch.delenv(name, raising=False)

    settings = build_config_obj(TomkitSettings, DEFAULT_CONFIG_FILE_PATH)

    assert settings.tomkit_log_level == "INFO"
    assert settings.catalog_dir == BUNDLED_CATALOG_DIR
    assert settings.cache_dir == "./tomcache"
    assert settings.threads == 1
    assert settings.oracle_sample_pairs == 1000


def test_bundled_settings_read_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("TOMKIT_CATALOG_DIR", str(tmp_path))
    monkeypatch.setenv("TOMKIT_LOG_LEVEL", "DEBUG")

    settings = build_config_obj(TomkitSettings, DEFAULT_CONFIG_FILE_PATH)

    assert settings.catalog_dir == str(tmp_path)
    assert settings.tomkit_log_level == "DEBUG"
