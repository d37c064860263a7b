from abc import ABC, abstractmethod
from typing import Generic, Type

from pydantic import BaseModel, ConfigDict
from typing_extensions import TypeVar

TypeDTO = TypeVar("TypeDTO", bound="DataTransferObject")
TypeDTOResponse = TypeVar("TypeDTOResponse", bound="DataTransferObject")


class DataTransferObject(BaseModel):
    """
    Command or result that travels through the buses
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)


class Bus(ABC):
    log_after_execution: bool = True

    @abstractmethod
    def execute(
        self, dto: TypeDTO, return_type: Type[TypeDTOResponse] | None = None
    ) -> TypeDTOResponse | None:
        """
        Execute a command DTO.
        return_type only narrows the static type of the response.
        """


class Feature(ABC, Generic[TypeDTO, TypeDTOResponse]):
    """
    Atomic operation: one command in, one result out.

    Injected dependencies (catalog_repository, marks_cache, settings) are set
    as attributes by the container before the first execution.

    Example:
        @tomkit_app.feature(CmdFingerprint)
        class FingerprintFeature(Feature[CmdFingerprint, ResFingerprint]):
            def execute(self, dto: CmdFingerprint) -> ResFingerprint:
                return ResFingerprint(fingerprint=fingerprint(dto.table))
    """

    @abstractmethod
    def execute(self, dto: TypeDTO) -> TypeDTOResponse | None:
        """
        Args:
            dto: the command

        Returns:
            the result DTO, or None
        """


class ApplicationService(ABC, Generic[TypeDTO, TypeDTOResponse]):
    """
    Orchestration of features (scan, verify, compare), which it runs through
    its own feature_bus. Same injected dependencies as a Feature.
    """
    feature_bus: Bus

    def __init__(self, feature_bus: Bus, *args, **kwargs):
        self.feature_bus = feature_bus

    @abstractmethod
    def execute(self, dto: TypeDTO) -> TypeDTOResponse | None:
        """
        Args:
            dto: the command

        Returns:
            the result DTO, or None
        """
