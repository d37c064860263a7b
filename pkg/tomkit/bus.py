import time
from logging import Logger
from typing import Callable, Dict, Optional, Type

from .exceptions import CommandAlreadyRegistered, UnknownCommand
from .tomkit_abstractions import (
    ApplicationService,
    Bus,
    DataTransferObject,
    Feature,
    TypeDTO,
    TypeDTOResponse,
)
from .tomkit_logger import is_logger_in_debug, logger


class FeatureBus(Bus):
    """Atomic operations: load, compute, fingerprint, compare"""

    def __init__(self, logger_bus: Logger = logger):  # type: ignore[assignment]
        self.feature_registry: Dict[str, Feature] = dict()
        self.handle_error: Optional[Callable] = None
        self.logger: Logger = logger_bus or logger  # type: ignore[assignment]

    def register_feature(self, dto: Type[DataTransferObject], feature: Feature) -> bool:
        if dto.__name__ in self.feature_registry:
            raise CommandAlreadyRegistered(f"Command {dto.__name__} is already registered")

        self.logger.debug(f"Registering feature [{dto.__name__}]")
        self.feature_registry[dto.__name__] = feature
        return True

    def execute(  # type: ignore[override]
        self, dto: TypeDTO, return_type: Type[TypeDTOResponse] | None = None
    ) -> TypeDTOResponse | None:
        """Run the feature registered for the command, through the error handler if any"""
        command = dto.__class__.__name__
        self.logger.debug(f"Executing feature [{command}]")
        started = time.perf_counter()

        try:
            response = self.feature_registry[command].execute(dto)
        except Exception as error:
            if self.handle_error:
                return self.handle_error(error)
            raise error

        if is_logger_in_debug() or self.log_after_execution:
            elapsed = time.perf_counter() - started
            self.logger.debug(f"Feature [{command}] done in {elapsed:.2f}s")
        return response


class ApplicationServiceBus(Bus):
    """Orchestration layer; each service holds the feature bus"""

    def __init__(self, logger_bus: Logger = logger):  # type: ignore[assignment]
        self.app_service_registry: Dict[str, ApplicationService] = dict()
        self.handle_error: Optional[Callable] = None
        self.logger = logger_bus or logger

    def register_app_service(
        self, dto: Type[DataTransferObject], app_service: ApplicationService
    ) -> bool:
        if dto.__name__ in self.app_service_registry:
            raise CommandAlreadyRegistered(f"Command {dto.__name__} is already registered")

        self.logger.debug(f"Registering application service [{dto.__name__}]")
        self.app_service_registry[dto.__name__] = app_service
        return True

    def execute(  # type: ignore[override]
        self, dto: TypeDTO, return_type: Type[TypeDTOResponse] | None = None
    ) -> TypeDTOResponse | None:
        command = dto.__class__.__name__
        self.logger.info(f"Executing [{command}]")
        started = time.perf_counter()

        try:
            response = self.app_service_registry[command].execute(dto)
        except Exception as error:
            if self.handle_error:
                return self.handle_error(error)
            raise error

        if is_logger_in_debug() or self.log_after_execution:
            self.logger.info(f"[{command}] done in {time.perf_counter() - started:.2f}s")
        return response


# ---------------------------------------------------------------------------------------------
# Facade
# ---------------------------------------------------------------------------------------------
class TomkitBus(Bus):
    """Routes a command to the application service bus or to the feature bus"""

    def __init__(
        self,
        feature_bus: FeatureBus,
        app_service_bus: ApplicationServiceBus,
        logger_bus: Logger = logger,  # type: ignore[assignment]
    ):
        self.feature_bus = feature_bus
        self.app_service_bus = app_service_bus
        self.handle_error: Optional[Callable] = None
        self.logger = logger_bus or logger

        shared = set(self.feature_bus.feature_registry).intersection(
            self.app_service_bus.app_service_registry
        )
        if shared:
            raise CommandAlreadyRegistered(
                f"Commands {sorted(shared)} are registered both as features and as "
                f"application services"
            )

    def execute(  # type: ignore[override]
        self, dto: TypeDTO, return_type: Type[TypeDTOResponse] | None = None
    ) -> TypeDTOResponse | None:
        command = dto.__class__.__name__
        try:
            if command in self.app_service_bus.app_service_registry:
                return self.app_service_bus.execute(dto)

            if command in self.feature_bus.feature_registry:
                return self.feature_bus.execute(dto)

            raise UnknownCommand(
                f"No feature or application service is registered for {command}; "
                f"check that its module is imported"
            )

        except Exception as error:
            if self.handle_error:
                return self.handle_error(error)
            raise error
