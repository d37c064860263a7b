from typing import Any, Callable, List, Protocol

from .tomkit_conf import TomkitSettings


class Middleware(Protocol):
    """Callable run on every command before it reaches the bus"""

    def __call__(self, dto: Any) -> Any:
        """
        Return the (possibly replaced) command, or raise to reject it.
        """
        ...


class MiddlewarePipeline:
    """Runs middlewares in registration order, then the executor"""

    def __init__(self):
        self.middlewares: List[Middleware] = []

    def add_middleware(self, middleware: Middleware):
        self.middlewares.append(middleware)

    def execute(self, dto: Any, executor: Callable, **kwargs) -> Any:
        """
        A middleware may return an instance of another class; it is cast back to
        the original command class so the bus still finds its handler.
        """
        original_dto_class = dto.__class__

        processed_dto = dto
        for middleware in self.middlewares:
            processed_dto = middleware(processed_dto)

        if processed_dto.__class__ != original_dto_class:
            processed_dto.__class__ = original_dto_class

        return executor(processed_dto, **kwargs)


class RuntimeDefaults:
    """Fill the unset runtime fields of a command (the worker count) from settings"""

    FIELDS = {"threads": "threads"}

    def __init__(self, settings: TomkitSettings):
        self.settings = settings

    def __call__(self, dto: Any) -> Any:
        updates = {
            field: getattr(self.settings, setting)
            for field, setting in self.FIELDS.items()
            if field in getattr(type(dto), "model_fields", {}) and getattr(dto, field) is None
        }
        if not updates:
            return dto
        return dto.model_copy(update=updates)
