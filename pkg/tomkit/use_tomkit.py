from functools import partial
from typing import Any, Dict, Optional, Type

from sincpro_log.logger import LoggerProxy, create_logger

from . import ioc
from .bus import TomkitBus
from .error_handler import ErrorHandler, build_error_handler_chain
from .exceptions import DependencyAlreadyRegistered, TomkitNotBuilt
from .middleware import Middleware, MiddlewarePipeline, RuntimeDefaults
from .tomkit_abstractions import TypeDTO, TypeDTOResponse
from .tomkit_conf import TomkitSettings
from .tomkit_conf import settings as default_settings


class UseTomkit:
    """Entry point: owns the container, registered commands, middlewares and error handlers"""

    def __init__(
        self,
        bundled_context_name: str = "tomkit",
        settings: TomkitSettings | None = None,
        log_after_execution: bool = True,
        log_app_services: bool = True,
        log_features: bool = True,
    ):
        """
        Args:
            bundled_context_name (str): Name of the logger
            settings (TomkitSettings): Runtime settings, the yaml-loaded ones by default
            log_after_execution (bool): If False, execution timings are not logged
            log_app_services (bool): Log application service timings
            log_features (bool): Log feature timings
        """
        self._is_logger_configured: bool = False
        self._logger_name: str = bundled_context_name
        self._logger: LoggerProxy | None = None
        self.log_after_execution: bool = log_after_execution
        self.log_app_services: bool = log_app_services
        self.log_features: bool = log_features
        self.settings: TomkitSettings = settings or default_settings

        self._container = ioc.TomkitContainer(  # type: ignore[call-arg]
            logger_bus=self.logger, settings=self.settings
        )

        # Decorators
        self.feature = partial(ioc.inject_feature_to_bus, self._container)
        self.app_service = partial(ioc.inject_app_service_to_bus, self._container)

        self.dynamic_dep_registry: Dict[str, Any] = dict()

        self._global_error_handlers: list[ErrorHandler] = []
        self._feature_error_handlers: list[ErrorHandler] = []
        self._app_service_error_handlers: list[ErrorHandler] = []
        self.global_error_handler: Optional[ErrorHandler] = None
        self.feature_error_handler: Optional[ErrorHandler] = None
        self.app_service_error_handler: Optional[ErrorHandler] = None

        self.middleware_pipeline = MiddlewarePipeline()
        self.middleware_pipeline.add_middleware(RuntimeDefaults(self.settings))

        self.was_initialized: bool = False
        self.bus: TomkitBus | None = None

    def __call__(
        self, dto: TypeDTO, return_type: Type[TypeDTOResponse] | None = None
    ) -> TypeDTOResponse | None:
        """Run a command through the middlewares and the bus"""
        if not self.was_initialized:
            self.build_root_bus()

        if self.bus is None:
            raise TomkitNotBuilt(
                "The bus was not built; check that the feature and service modules "
                "are imported"
            )

        def executor(processed_dto, **exec_kwargs) -> TypeDTOResponse | None:
            assert self.bus is not None
            return self.bus.execute(processed_dto)

        return self.middleware_pipeline.execute(dto, executor, return_type=return_type)

    def build_root_bus(self):
        """Inject dependencies and error handlers, then build the facade bus"""
        self._add_default_dependencies()
        self._add_dependencies_provided_by_user()
        self._add_error_handlers_provided_by_user()
        self.was_initialized = True

        self.bus = self._container.tomkit_bus()  # type: ignore[assignment]
        self.bus.log_after_execution = self.log_after_execution
        self.bus.feature_bus.log_after_execution = (
            self.log_after_execution and self.log_features
        )
        self.bus.app_service_bus.log_after_execution = (
            self.log_after_execution and self.log_app_services
        )

    def add_dependency(self, name, dep: Any):
        """Expose dep as attribute `name` on every feature and application service"""
        if name in self.dynamic_dep_registry:
            raise DependencyAlreadyRegistered(f"The dependency {name} is already injected")
        self.dynamic_dep_registry[name] = dep

    def add_middleware(self, middleware: Middleware):
        self.middleware_pipeline.add_middleware(middleware)

    def add_global_error_handler(self, handler: ErrorHandler):
        """Register a handler around the facade bus; re-raising delegates to the next one"""
        if not callable(handler):
            raise TypeError("The handler must be a callable")
        self._global_error_handlers.append(handler)
        self.global_error_handler = build_error_handler_chain(self._global_error_handlers)
        if self.was_initialized and self.bus is not None:
            self.bus.handle_error = self.global_error_handler

    def add_feature_error_handler(self, handler: ErrorHandler):
        if not callable(handler):
            raise TypeError("The handler must be a callable")
        self._feature_error_handlers.append(handler)
        self.feature_error_handler = build_error_handler_chain(self._feature_error_handlers)
        if self.was_initialized and self.bus is not None:
            self.bus.feature_bus.handle_error = self.feature_error_handler

    def add_app_service_error_handler(self, handler: ErrorHandler):
        if not callable(handler):
            raise TypeError("The handler must be a callable")
        self._app_service_error_handlers.append(handler)
        self.app_service_error_handler = build_error_handler_chain(
            self._app_service_error_handlers
        )
        if self.was_initialized and self.bus is not None:
            self.bus.app_service_bus.handle_error = self.app_service_error_handler

    def _add_default_dependencies(self):
        defaults = {
            "settings": self.settings,
            "catalog_repository": self._container.catalog_repository(),
            "marks_cache": self._container.marks_cache(),
        }
        for name, dep in defaults.items():
            self.dynamic_dep_registry.setdefault(name, dep)

    def _add_dependencies_provided_by_user(self):
        if "feature_registry" in self._container.feature_bus.attributes:
            feature_registry = self._container.feature_bus.attributes[
                "feature_registry"
            ].kwargs
            for _, feature in feature_registry.items():
                feature.add_attributes(**self.dynamic_dep_registry)

        if "app_service_registry" in self._container.app_service_bus.attributes:
            app_service_registry = self._container.app_service_bus.attributes[
                "app_service_registry"
            ].kwargs
            for _, app_service in app_service_registry.items():
                app_service.add_attributes(**self.dynamic_dep_registry)

    def _add_error_handlers_provided_by_user(self):
        if self.global_error_handler:
            self._container.tomkit_bus.add_attributes(handle_error=self.global_error_handler)

        if self.feature_error_handler:
            self._container.feature_bus.add_attributes(
                handle_error=self.feature_error_handler
            )

        if self.app_service_error_handler:
            self._container.app_service_bus.add_attributes(
                handle_error=self.app_service_error_handler
            )

    @property
    def logger(self) -> LoggerProxy:
        if not self._is_logger_configured:
            self._logger = create_logger(self._logger_name)
            self._is_logger_configured = True
        return self._logger  # type: ignore[return-value]


