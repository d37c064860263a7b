"""Settings loaded from yaml, with `$ENV:` indirection to environment variables"""

import os
import warnings
from typing import Literal, Type, TypeVar

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator

PACKAGE_DIR = os.path.dirname(__file__)
BUNDLED_CATALOG_DIR = os.path.join(PACKAGE_DIR, "catalogs")
BUNDLED_GOLDEN_DIR = os.path.join(PACKAGE_DIR, "goldens")

DEFAULT_CONFIG_FILE_PATH = (
    os.getenv("TOMKIT_CONFIG_FILE", default=None) or PACKAGE_DIR + "/conf/tomkit_conf.yml"
)


def load_yaml_file(file_path: str) -> dict:
    """Load a yaml file and return the content as a dictionary"""
    with open(file_path) as file:
        return yaml.safe_load(file) or {}


class TomkitConfig(BaseModel):
    """Base config model"""

    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=True)

    @model_validator(mode="before")
    def resolve_env_variables(cls, values):
        """Replace every `$ENV:NAME` value by the environment variable NAME.

        An unset variable falls back to the field default; a field without a
        default gets a warning and is dropped, so pydantic reports it missing.
        """
        for field_name, value in list(values.items()):
            if not (isinstance(value, str) and value.startswith("$ENV:")):
                continue

            env_var_name = value.split("$ENV:")[1]
            env_value = os.getenv(env_var_name)
            if env_value is not None:
                values[field_name] = env_value
                continue

            field_info = cls.model_fields.get(field_name, None)
            if field_info is not None and not field_info.is_required():
                values[field_name] = field_info.get_default(call_default_factory=True)
            else:
                warnings.warn(
                    f"Environment variable [{env_var_name}] is not set for field "
                    f"[{field_name}] and no default value was provided."
                )
                values.pop(field_name)
        return values


TypeTomkitConfigModel = TypeVar("TypeTomkitConfigModel", bound=TomkitConfig)


class TomkitSettings(TomkitConfig):
    """Runtime settings of the verifier"""

    tomkit_log_level: Literal["INFO", "DEBUG"] = "INFO"
    catalog_dir: str = BUNDLED_CATALOG_DIR
    cache_dir: str = "./tomcache"
    closure_bound: int = Field(default=10_000, gt=0)
    subgroup_bound: int = Field(default=100_000, gt=0)
    threads: int = Field(default=1, ge=1)
    oracle_sample_pairs: int = Field(default=1_000, ge=0)
    random_seed: int = 64


def build_config_obj(
    class_config_obj: Type[TypeTomkitConfigModel],
    config_path: str,
    sub_key: str | None = None,
) -> TypeTomkitConfigModel:
    """Build a config object from a yaml file
    if sub_key is provided, only that section of the file is used
    """
    config_dict = load_yaml_file(config_path)

    if sub_key:
        config_section = config_dict.get(sub_key, None)
        if config_section is None:
            raise ValueError(f"Config section {sub_key} not found in {config_path}")
        config_dict = config_section

    return class_config_obj(**config_dict)


settings = build_config_obj(TomkitSettings, DEFAULT_CONFIG_FILE_PATH)
