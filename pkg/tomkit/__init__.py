from .middleware import Middleware
from .tomkit_abstractions import (
    ApplicationService,
    DataTransferObject,
    Feature,
    TypeDTO,
    TypeDTOResponse,
)
from .tomkit_logger import logger
from .use_tomkit import UseTomkit
from .app import build_tomkit  # isort: skip

__all__ = [
    "ApplicationService",
    "DataTransferObject",
    "Feature",
    "UseTomkit",
    "build_tomkit",
    "logger",
    "Middleware",
    "TypeDTO",
    "TypeDTOResponse",
]
