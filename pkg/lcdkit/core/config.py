"""Configuration management for lcdkit
Supports environment variables and .env files
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Toolkit settings with environment variable support"""

    # Enumeration guards
    enumeration_budget: int = Field(default=2**25, alias="LCDKIT_BUDGET")
    group_budget: int = Field(default=2**30, alias="LCDKIT_GROUP_BUDGET")
    distance_budget: int = Field(default=2**24, alias="LCDKIT_DISTANCE_BUDGET")
    mass_max_length: int = Field(default=6, alias="LCDKIT_MASS_MAX_LENGTH")

    # Asymptotic evaluation
    precision: int = Field(default=12, alias="LCDKIT_PRECISION")

    # Census execution
    workers: int = Field(default=1, alias="LCDKIT_WORKERS")
    cache_dir: str | None = Field(default=None, alias="LCDKIT_CACHE_DIR")

    # Logging
    log_level: str = Field(default="WARNING", alias="LCDKIT_LOG_LEVEL")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
        "populate_by_name": True,
    }

    @field_validator(
        "enumeration_budget", "group_budget", "distance_budget", "mass_max_length", "workers"
    )
    @classmethod
    def validate_positive(cls, v):
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("precision")
    @classmethod
    def validate_precision(cls, v):
        if not 1 <= v <= 200:
            raise ValueError("precision must lie in 1..200 decimal digits")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v):
        level = v.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level: {v}")
        return level


# Global settings instance
settings = Settings()
