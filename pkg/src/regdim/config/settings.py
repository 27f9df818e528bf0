"""
Runtime settings.

Creates the settings object the command line and pipeline read their
defaults from.
"""
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Defaults for a regdim run.

    Every field can be overridden with an environment variable, e.g.
    ``REGDIM_CHARACTERISTIC=3`` or ``REGDIM_JOBS=4``.
    """
    model_config = SettingsConfigDict(env_prefix="REGDIM_", env_file=".env", extra="ignore")

    characteristic: int = Field(2, description="Prime characteristic of the coefficient field")
    jobs: int = Field(1, ge=1, description="Worker processes for analyze/sweep")
    log_level: str = Field("INFO", description="Root logging level")
    taylor_max_generators: int = Field(12, ge=1, description="Generator cap for the Taylor oracle")
    box_growth_limit: int = Field(32, ge=1, description="Rounds of lower-shell growth before giving up")
    replay_path: Path = Field(Path("regdim-replay.json"), description="Where sweep failures are written")
    seed: int = Field(0, ge=0, lt=2**64, description="Default seed for random corpora")

    @field_validator('log_level', mode='before')
    @classmethod
    def normalize_level(cls, v):
        if isinstance(v, str):
            return v.upper()
        return v


@lru_cache(maxsize=1)
def _environment_settings() -> Settings:
    return Settings()


def get_settings(overrides: Optional[Mapping[str, Any]] = None) -> Settings:
    """
    Create the settings for a run.

    Args:
        overrides: Values that take precedence over the environment

    Returns:
        Settings instance
    """
    settings = _environment_settings()
    if overrides:
        settings = settings.model_copy(update={k: v for k, v in overrides.items() if v is not None})
    return settings
