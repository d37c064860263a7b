import pytest

from tomkit import build_tomkit
from tomkit.tomkit_conf import TomkitSettings

# C4 listed twice under different ids
DUPLICATED_C4 = """group 4 1
gen 1 2 3 0
end
group 4 2
gen 1 0 2 3
gen 0 1 3 2
end
group 4 3
gen 3 0 1 2
end
"""


@pytest.fixture()
def duplicated_catalog(tmp_path) -> str:
    path = tmp_path / "catalogs"
    path.mkdir()
    (path / "order_4.txt").write_text(DUPLICATED_C4)
    return str(path)


@pytest.fixture()
def duplicated_tomkit(tmp_path, duplicated_catalog):
    cache_dir = str(tmp_path / "cache")
    settings = TomkitSettings(catalog_dir=duplicated_catalog, cache_dir=cache_dir)
    return build_tomkit(settings, log_after_execution=False)
