"""Inversion of control container: buses, registries and shared adapters"""

from enum import Enum
from functools import wraps
from typing import Callable, TypeVar

from dependency_injector import containers, providers
from dependency_injector.providers import Dict, Factory, Object, Singleton
from sincpro_log.logger import LoggerProxy

from .bus import ApplicationServiceBus, FeatureBus, TomkitBus
from .catalog.repository import CatalogRepository, MarksCache
from .exceptions import CommandAlreadyRegistered
from .tomkit_abstractions import DataTransferObject
from .tomkit_conf import TomkitSettings

T = TypeVar("T", bound=type)

DTOClass = type[DataTransferObject]
DTORegistration = DTOClass | list[DTOClass]


# ---------------------------------------------------------------------------------------------
# Container Definition
# ---------------------------------------------------------------------------------------------
class TomkitContainer(containers.DeclarativeContainer):
    """Wires settings, adapters and buses at runtime"""

    logger_bus: Object[LoggerProxy] = providers.Object()
    settings: Object[TomkitSettings] = providers.Object()
    dto_registry: Dict = Dict({})

    # adapters
    catalog_repository: Singleton[CatalogRepository] = providers.Singleton(
        CatalogRepository,
        catalog_dir=settings.provided.catalog_dir,
        closure_bound=settings.provided.closure_bound,
    )
    marks_cache: Singleton[MarksCache] = providers.Singleton(
        MarksCache, cache_dir=settings.provided.cache_dir
    )

    # atomic layer
    feature_registry: Dict = providers.Dict({})
    feature_bus: Singleton[FeatureBus] = providers.Singleton(
        FeatureBus, logger_bus  # type: ignore[arg-type]
    )

    # orchestration layer
    app_service_registry: Dict = providers.Dict({})
    app_service_bus: Singleton[ApplicationServiceBus] = providers.Singleton(
        ApplicationServiceBus, logger_bus  # type: ignore[arg-type]
    )

    # Facade
    tomkit_bus: Factory[TomkitBus] = providers.Factory(
        TomkitBus,
        feature_bus=feature_bus,
        app_service_bus=app_service_bus,
        logger_bus=logger_bus,  # type: ignore[arg-type]
    )


class ServiceType(Enum):
    FEATURE = "feature"
    APP_SERVICE = "app_service"


# ---------------------------------------------------------------------------------------------
# Registration
# ---------------------------------------------------------------------------------------------
def _register_service(
    container: TomkitContainer,
    service_type: ServiceType,
    dto: DTORegistration,
    decorated_class: type,
) -> None:
    dto_list = dto if isinstance(dto, list) else [dto]

    for command in dto_list:
        name = command.__name__
        if (
            name in container.feature_registry.kwargs
            or name in container.app_service_registry.kwargs
        ):
            raise CommandAlreadyRegistered(
                f"The command [{name} from {command.__module__}] is already registered"
            )

        container.dto_registry = providers.Dict(
            {name: command, **container.dto_registry.kwargs}
        )

        match service_type:
            case ServiceType.FEATURE:
                container.feature_registry = providers.Dict(
                    {
                        name: providers.Factory(decorated_class),
                        **container.feature_registry.kwargs,
                    }
                )
                container.feature_bus.add_attributes(
                    feature_registry=container.feature_registry
                )

            case ServiceType.APP_SERVICE:
                container.app_service_registry = providers.Dict(
                    {
                        name: providers.Factory(decorated_class, container.feature_bus),
                        **container.app_service_registry.kwargs,
                    }
                )
                container.app_service_bus.add_attributes(
                    app_service_registry=container.app_service_registry
                )


def inject_feature_to_bus(
    container: TomkitContainer, dto: DTORegistration
) -> Callable[[T], T]:
    """Decorator registering a Feature for one or more commands"""

    @wraps(inject_feature_to_bus)
    def decorator(decorated_class: T) -> T:
        _register_service(container, ServiceType.FEATURE, dto, decorated_class)
        return decorated_class

    return decorator


def inject_app_service_to_bus(
    container: TomkitContainer, dto: DTORegistration
) -> Callable[[T], T]:
    """Decorator registering an ApplicationService for one or more commands"""

    @wraps(inject_app_service_to_bus)
    def decorator(decorated_class: T) -> T:
        _register_service(container, ServiceType.APP_SERVICE, dto, decorated_class)
        return decorated_class

    return decorator
