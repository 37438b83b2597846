"""Centralized configuration using Pydantic Settings."""

from functools import lru_cache
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    """Toolkit settings loaded from QEXP_* environment variables."""

    # ==================== Tolerances ====================
    unitarity_tol: float = 1e-10
    convergence_tol: float = 1e-9
    # Singular values at or below this count toward a nullspace
    fixed_tol: float = 1e-8

    # ==================== Solver ====================
    max_iterations: int = 100_000
    # Operator dimension at or below which the dense path is auto-selected
    dense_threshold: int = 256
    seed: int = 0

    # ==================== Groups ====================
    max_group_order: int = 1_000_000
    mult_table_max_order: int = 10_000
    max_action_set_size: int = 4096
    max_ring_k: int = 3

    # ==================== CLI ====================
    max_commutant_unknowns: int = 1600
    threads: int = 1
    log_level: str = "INFO"
    log_file: str = "qexp.log"

    # Handle empty strings for numeric fields that have defaults
    @field_validator("seed", "threads", "max_iterations", "dense_threshold", mode="before")
    @classmethod
    def parse_optional_int(cls, v, info):
        if v == "" or v is None:
            return cls.model_fields[info.field_name].default
        return int(v)

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v):
        if not v:
            return "INFO"
        return str(v).upper()

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, v):
        if v < 1:
            raise ValueError("threads must be >= 1")
        return v

    model_config = SettingsConfigDict(
        env_prefix="QEXP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()

