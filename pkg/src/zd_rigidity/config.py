"""Configuration for the rigidity engine.

Defaults can be overridden through ZDRIGID_* environment variables (or a .env file in
the working directory); explicit arguments passed by callers always take precedence.

Configuration Priority Order:
1. Explicit arguments (CLI flags, system-file options) - highest priority
2. Environment variables (ZDRIGID_MIXING_BOUND, ...)
3. Built-in defaults - lowest priority
"""

import logging
from functools import lru_cache

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class GroebnerLimits(BaseModel):
    """Resource budget for one strong Gröbner basis computation."""

    max_pairs: int = Field(default=5000, description="Maximum critical pairs processed", gt=0)
    max_coeff_bits: int = Field(
        default=4096, description="Maximum coefficient bit length in any basis element", gt=0
    )

    model_config = {"frozen": True}


class EngineSettings(BaseSettings):
    """Tunable defaults for every analysis pipeline."""

    model_config = SettingsConfigDict(
        env_prefix="ZDRIGID_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    gb_max_pairs: int = Field(default=5000, description="Gröbner pair budget", gt=0)
    gb_max_coeff_bits: int = Field(default=4096, description="Gröbner coefficient budget", gt=0)
    mixing_bound: int = Field(default=4, description="Sup-norm bound of the mixing search", ge=1)
    mahler_grid: int = Field(default=512, description="Per-axis quadrature resolution", ge=2)
    roots_of_unity_order: int = Field(
        default=64, description="Order N of the roots-of-unity oracle", ge=2
    )
    periodic_orders: list[int] = Field(
        default_factory=lambda: [8, 16, 32], description="Levels N for periodic-point counts"
    )
    seed: int = Field(default=0, description="Seed for the sampling checks", ge=0)
    variety_samples: int = Field(
        default=100_000, description="Samples for the variety-measure check", gt=0
    )
    zdc_radius: int = Field(
        default=8, description="Truncation radius of the zero-divisor check", ge=1
    )
    zdc_trials: int = Field(
        default=16, description="Random baselines in the zero-divisor check", ge=1
    )

    def groebner_limits(self) -> GroebnerLimits:
        """Get the Gröbner limits record derived from these settings."""
        return GroebnerLimits(max_pairs=self.gb_max_pairs, max_coeff_bits=self.gb_max_coeff_bits)


@lru_cache(maxsize=1)
def get_settings() -> EngineSettings:
    """Load engine settings once per process.

    Returns:
        EngineSettings: Settings resolved from the environment and defaults
    """
    settings = EngineSettings()
    logger.debug("Engine settings resolved: %s", settings.model_dump())
    return settings


DEFAULT_LIMITS = GroebnerLimits()

__all__ = ["DEFAULT_LIMITS", "EngineSettings", "GroebnerLimits", "get_settings"]
