"""
Configuration Module

Centralized configuration for the certification toolkit.
Values come from the environment (optionally a .env file); CLI flags override them.
"""

import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.domain.errors import DomainError
from src.domain.perm import DEFAULT_MAX_INVOLUTION_DEGREE

# Load environment variables
load_dotenv()


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass
class LimitsConfig:
    """Resource bounds for materialisation, sweeps and subgroup search."""
    max_materialize: int = 1_000_000
    max_exhaustive_n: int = DEFAULT_MAX_INVOLUTION_DEGREE
    max_search_degree: int = 6
    max_subgroups: int = 200_000

    @classmethod
    def from_env(cls) -> "LimitsConfig":
        return cls(
            max_materialize=_env_int("KNESER_MAX_MATERIALIZE", 1_000_000, minimum=1),
            max_exhaustive_n=_env_int("KNESER_MAX_EXHAUSTIVE_N", DEFAULT_MAX_INVOLUTION_DEGREE, minimum=1),
            max_search_degree=_env_int("KNESER_MAX_SEARCH_DEGREE", 6, minimum=1),
            max_subgroups=_env_int("KNESER_MAX_SUBGROUPS", 200_000, minimum=1),
        )


@dataclass
class SweepConfig:
    """Worker count and sampling defaults for involution sweeps."""
    workers: int = 1
    seed: int = 0
    sample_count: int = 1000

    @classmethod
    def from_env(cls) -> "SweepConfig":
        return cls(
            workers=_env_int("KNESER_WORKERS", 1, minimum=1),
            seed=_env_int("KNESER_SEED", 0),
            sample_count=_env_int("KNESER_SAMPLE_COUNT", 1000, minimum=1),
        )


@dataclass
class AppConfig:
    """Main application configuration."""
    log_level: str = "WARNING"
    plan_path: Path = field(default_factory=lambda: Path("data/sweeps/desk_scale.yaml"))

    # Sub-configurations
    limits: LimitsConfig = field(default_factory=LimitsConfig.from_env)
    sweep: SweepConfig = field(default_factory=SweepConfig.from_env)

    @classmethod
    def from_env(cls) -> "AppConfig":
        return cls(
            log_level=os.getenv("LOG_LEVEL", "WARNING").upper(),
            plan_path=Path(os.getenv("KNESER_PLAN_PATH", "data/sweeps/desk_scale.yaml")),
            limits=LimitsConfig.from_env(),
            sweep=SweepConfig.from_env(),
        )

    def with_overrides(
        self,
        max_materialize: Optional[int] = None,
        max_exhaustive_n: Optional[int] = None,
        workers: Optional[int] = None,
        log_level: Optional[str] = None,
    ) -> "AppConfig":
        """Copy with CLI flag values applied; None leaves a setting unchanged."""
        limits = self.limits
        if max_materialize is not None:
            limits = replace(limits, max_materialize=max_materialize)
        if max_exhaustive_n is not None:
            limits = replace(limits, max_exhaustive_n=max_exhaustive_n)
        sweep = self.sweep if workers is None else replace(self.sweep, workers=workers)
        return replace(
            self,
            limits=limits,
            sweep=sweep,
            log_level=log_level.upper() if log_level else self.log_level,
        )


# Global configuration instance
_config: Optional[AppConfig] = None


def get_config() -> AppConfig:
    """Get the global configuration instance."""
    global _config
    if _config is None:
        _config = AppConfig.from_env()
    return _config


def reload_config() -> AppConfig:
    """Reload configuration from environment."""
    global _config
    _config = AppConfig.from_env()
    return _config


def get_limits_config() -> LimitsConfig:
    return get_config().limits


def get_sweep_config() -> SweepConfig:
    return get_config().sweep
