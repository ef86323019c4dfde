from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, Json
from typing import Optional

__all__ = ["initial_settings"]


class InitialSettings(BaseSettings):
    """Where to look for configuration before the real settings are built"""

    file: Optional[str] = Field(None, description="JSON config file")
    json: Optional[Json] = Field(None)  # raw config passed through an env var

    load_config: bool = Field(
        True, description="set to false to run on defaults and env vars only"
    )

    model_config = SettingsConfigDict(
        env_prefix="TREE_ENERGY__CONFIG__",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
    )


initial_settings = InitialSettings()
