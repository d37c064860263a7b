"""TomkitBus facade"""

import pytest

from tomkit import ApplicationService, DataTransferObject, Feature, bus
from tomkit.exceptions import CommandAlreadyRegistered, UnknownCommand

from ..fixtures import CmdDoubleOrder, CmdEchoOrder, ResDoubleOrder, ResEchoOrder


def test_tomkit_bus_routes_both_layers(
    feature_bus_instance: bus.FeatureBus, app_service_bus_instance: bus.ApplicationServiceBus
):
    tomkit_bus = bus.TomkitBus(feature_bus_instance, app_service_bus_instance)

    assert tomkit_bus.execute(CmdEchoOrder(order=8), ResEchoOrder).order == 8
    assert tomkit_bus.execute(CmdDoubleOrder(order=8), ResDoubleOrder).order == 16


def test_tomkit_bus_unknown_command(
    feature_bus_instance: bus.FeatureBus, app_service_bus_instance: bus.ApplicationServiceBus
):
    class CmdNotRegistered(DataTransferObject):
        order: int

    tomkit_bus = bus.TomkitBus(feature_bus_instance, app_service_bus_instance)

    with pytest.raises(UnknownCommand):
        tomkit_bus.execute(CmdNotRegistered(order=1))


def test_tomkit_bus_rejects_command_in_both_layers(
    feature_bus_instance: bus.FeatureBus,
    app_service_bus_instance: bus.ApplicationServiceBus,
    feature_instance_test: Feature,
    app_service_instance_test: ApplicationService,
):
    class CmdShared(DataTransferObject):
        order: int

    feature_bus_instance.register_feature(CmdShared, feature_instance_test)
    app_service_bus_instance.register_app_service(CmdShared, app_service_instance_test)

    with pytest.raises(CommandAlreadyRegistered):
        bus.TomkitBus(feature_bus_instance, app_service_bus_instance)
