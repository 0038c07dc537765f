from pathlib import Path
from typing import List, Optional, Union

from logzero import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from core.errors import InputError
from utils.helpers import FanoPoissonHelpers

DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "config" / "settings.yaml"


class LoggingSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directory: str = "logs"
    level: str = "INFO"
    max_bytes: int = Field(5_000_000, gt=0)
    backup_count: int = Field(5, ge=0)

    @field_validator("level")
    @classmethod
    def known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value}")
        return value


class VerificationSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_jobs: int = 1

    @field_validator("n_jobs")
    @classmethod
    def nonzero_jobs(cls, value: int) -> int:
        # joblib: positive counts, or negative for "all cores but k"
        if value == 0:
            raise ValueError("n_jobs must be nonzero")
        return value


class SamplingSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(0, ge=0)
    count: int = Field(50, ge=1)
    max_height: int = Field(100, ge=1)
    max_attempts: int = Field(200, ge=1)


class CubicSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    chart_order: List[int] = [0, 1, 2, 3, 4]

    @field_validator("chart_order")
    @classmethod
    def valid_chart_order(cls, value: List[int]) -> List[int]:
        if not value or len(set(value)) != len(value) or any(k not in range(5) for k in value):
            raise ValueError("chart_order must list distinct indices from 0..4")
        return value


class ReportSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    indent: int = Field(2, ge=0)


class Settings(BaseModel):
    """Validated contents of config/settings.yaml."""

    model_config = ConfigDict(extra="forbid")

    logging: LoggingSettings = LoggingSettings()
    verification: VerificationSettings = VerificationSettings()
    sampling: SamplingSettings = SamplingSettings()
    cubic: CubicSettings = CubicSettings()
    reports: ReportSettings = ReportSettings()


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """Load settings from YAML; a missing file gives the defaults."""
    path = Path(path) if path is not None else DEFAULT_CONFIG
    if not path.exists():
        logger.warning(f"Settings file {path} not found, using defaults")
        return Settings()
    payload = FanoPoissonHelpers.load_yaml(path.name, str(path.parent))
    if payload is None:
        return Settings()
    try:
        return Settings.model_validate(payload)
    except ValidationError as e:
        logger.error(f"Invalid settings in {path}: {e}")
        raise InputError(f"Invalid settings in {path}: {e.error_count()} error(s)") from e
