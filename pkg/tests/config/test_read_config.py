"""Read the config file and return the resolved config object."""

from tomkit.tomkit_conf import DEFAULT_CONFIG_FILE_PATH, load_yaml_file


def test_load_yaml_file(test_conf_yaml_path):
    content = load_yaml_file(test_conf_yaml_path)
    assert isinstance(content, dict)
    assert content["verifier"]["threads"] == 4


def test_load_empty_yaml_file(tmp_path):
    empty = tmp_path / "empty.yml"
    empty.write_text("")
    assert load_yaml_file(str(empty)) == {}


def test_bundled_config_is_readable():
    assert "closure_bound" in load_yaml_file(DEFAULT_CONFIG_FILE_PATH)
