"""
Toric Envelope Workbench - Configuration Module

Settings are read from the environment (prefix ``TORIC_``) or a local ``.env`` file:
- closure and example caps
- default monomial order and cone-ideal strategy
- algorithm1 scan behaviour
- logging
"""

from enum import Enum
from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class OrderName(str, Enum):
    """Monomial orders selectable from the command line."""

    GRLEX = "grlex"
    GREVLEX = "grevlex"


class ConeStrategy(str, Enum):
    """Construction routes for the vanishing ideal of a scalar cone."""

    INTERSECTION = "intersection"
    INTERPOLATION = "interpolation"


class LogFormat(str, Enum):
    """Renderers for structured log output."""

    CONSOLE = "console"
    JSON = "json"


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="TORIC_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Group enumeration
    closure_cap: int = Field(
        default=10000,
        ge=1,
        description="Largest group order enumerated before closure gives up",
    )

    # Degree search
    default_order: OrderName = Field(
        default=OrderName.GRLEX,
        description="Monomial order for Groebner computations: grlex or grevlex",
    )
    default_strategy: ConeStrategy = Field(
        default=ConeStrategy.INTERPOLATION,
        description="Cone ideal construction: interpolation or intersection",
    )
    cross_check_max_lines: int = Field(
        default=12,
        ge=0,
        description="Cross-validate interpolation against intersection up to this many lines",
    )
    radical_certificate: bool = Field(
        default=True,
        description="Accept the Hilbert degree certificate before falling back to Rabinowitsch",
    )
    algorithm1_full_scan: bool = Field(
        default=False,
        description="Evaluate every truncation degree and assert monotonicity",
    )

    # Example caps
    max_roots_param: int = Field(default=12, ge=1, description="Largest roots-of-unity order")
    max_torus_param: int = Field(default=6, ge=1, description="Largest torus exponent")
    max_dihedral_param: int = Field(default=6, ge=1, description="Largest dihedral parameter")
    max_permutation_param: int = Field(default=4, ge=1, description="Largest permutation size")
    max_unipotent_param: int = Field(default=4, ge=2, description="Largest unipotent size")

    # Bounds
    bounds_verified_max_n: int = Field(
        default=16, ge=2, description="Upper end of the range the bound invariants are checked on"
    )
    max_bounds_n: int = Field(
        default=24, ge=1, description="Largest n the bounds report evaluates"
    )

    # Verification
    verify_workers: int = Field(
        default=1, ge=1, description="Process pool size for the verify suite"
    )

    # Logging
    log_level: str = Field(default="WARNING", description="Root log level")
    log_format: LogFormat = Field(default=LogFormat.CONSOLE, description="console or json")


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
