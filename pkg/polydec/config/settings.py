"""
Process-wide settings for polydec.

Read once from POLYDEC_* environment variables (or a .env file in the working
directory) and cached. Per-invocation choices live in run_config.RunConfig.
"""

from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Process-wide settings, read from POLYDEC_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="POLYDEC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_json: bool = Field(default=False, description="Emit JSON log lines on stderr")

    # Reproducibility
    seed: int = Field(default=0, description="Default seed for state-iteration shuffling")

    # Oracle budgets used by --verify
    max_verify_vertices: int = Field(
        default=12,
        ge=0,
        description="Largest vertex count the brute-force oracles accept"
    )
    max_verify_boundary: int = Field(
        default=20,
        ge=0,
        description="Largest edge boundary the bipartition oracle enumerates"
    )

    @field_validator("log_level")
    @classmethod
    def normalise_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}")
        return level


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def reload_settings() -> Settings:
    """Drop the cached Settings and read the environment again."""
    get_settings.cache_clear()
    return get_settings()
