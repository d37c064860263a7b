import os

import pytest

from tomkit import ApplicationService, DataTransferObject, Feature, build_tomkit, bus
from tomkit.catalog.repository import CatalogRepository, MarksCache
from tomkit.group import FiniteGroup, Permutation, build_group
from tomkit.tomkit_conf import BUNDLED_CATALOG_DIR, TomkitSettings
from tomkit.use_tomkit import UseTomkit

# ---------------------------------------------------------------------------------------------
# Catalogs
# ---------------------------------------------------------------------------------------------
LARGE_CATALOG_DIR = os.getenv("TOMKIT_CATALOG_DIR") or BUNDLED_CATALOG_DIR
HAS_ORDER_64 = os.path.isfile(os.path.join(LARGE_CATALOG_DIR, "order_64.txt"))

requires_order_64 = pytest.mark.skipif(
    not HAS_ORDER_64,
    reason="order_64.txt is not in the catalog directory (export it with "
    "scripts/export_small_groups.g and point TOMKIT_CATALOG_DIR at it)",
)

BUNDLED_ORDERS = tuple(range(1, 17))


# ---------------------------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------------------------
def c2() -> FiniteGroup:
    return build_group([Permutation.from_images([1, 0])], label=(2, 1))


def s3() -> FiniteGroup:
    return build_group(
        [Permutation.from_cycles(3, [(0, 1)]), Permutation.from_cycles(3, [(0, 1, 2)])],
        label=(6, 1),
    )


@pytest.fixture()
def c2_group() -> FiniteGroup:
    return c2()


@pytest.fixture()
def s3_group() -> FiniteGroup:
    return s3()


@pytest.fixture(scope="session")
def bundled_repository() -> CatalogRepository:
    return CatalogRepository(BUNDLED_CATALOG_DIR)


@pytest.fixture(scope="session")
def large_repository() -> CatalogRepository:
    return CatalogRepository(LARGE_CATALOG_DIR)


# ---------------------------------------------------------------------------------------------
# Application
# ---------------------------------------------------------------------------------------------
@pytest.fixture()
def tmp_settings(tmp_path) -> TomkitSettings:
    return TomkitSettings(catalog_dir=BUNDLED_CATALOG_DIR, cache_dir=str(tmp_path / "cache"))


@pytest.fixture()
def marks_cache(tmp_settings) -> MarksCache:
    return MarksCache(tmp_settings.cache_dir)


@pytest.fixture()
def tomkit_app(tmp_settings) -> UseTomkit:
    return build_tomkit(tmp_settings, log_after_execution=False)


# ---------------------------------------------------------------------------------------------
# Bus doubles
# ---------------------------------------------------------------------------------------------
class CmdEchoOrder(DataTransferObject):
    order: int


class ResEchoOrder(DataTransferObject):
    order: int


class EchoOrderFeature(Feature):
    def execute(self, dto: CmdEchoOrder) -> ResEchoOrder:
        return ResEchoOrder(order=dto.order)


class CmdDoubleOrder(DataTransferObject):
    order: int


class ResDoubleOrder(DataTransferObject):
    order: int


class DoubleOrderService(ApplicationService):
    def execute(self, dto: CmdDoubleOrder) -> ResDoubleOrder:
        res = self.feature_bus.execute(CmdEchoOrder(order=dto.order), ResEchoOrder)
        assert res is not None
        return ResDoubleOrder(order=2 * res.order)


@pytest.fixture()
def feature_instance_test() -> Feature:
    return EchoOrderFeature()


@pytest.fixture()
def feature_bus_instance(feature_instance_test) -> bus.FeatureBus:
    feat_bus = bus.FeatureBus()
    feat_bus.register_feature(CmdEchoOrder, feature_instance_test)
    return feat_bus


@pytest.fixture()
def app_service_instance_test(feature_bus_instance) -> ApplicationService:
    return DoubleOrderService(feature_bus_instance)


@pytest.fixture()
def app_service_bus_instance(
    feature_bus_instance, app_service_instance_test
) -> bus.ApplicationServiceBus:
    app_serv_bus = bus.ApplicationServiceBus()
    app_serv_bus.register_app_service(CmdDoubleOrder, app_service_instance_test)
    return app_serv_bus
