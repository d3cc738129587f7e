"""Application configuration and settings management."""

from functools import lru_cache
from pathlib import Path
from typing import Any, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

ROOT_DIR = Path(__file__).resolve().parent.parent
CONFIG_DIR = ROOT_DIR.parent / "config"
PACKAGED_TABLES_DIR = Path(__file__).resolve().parent / "data" / "tables"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=CONFIG_DIR / ".env",
        env_file_encoding="utf-8",
        env_prefix="VWU_",
        extra="ignore",
    )

    tables_dir: Optional[Path] = Field(None, description="Directory of orbit closure tables")
    seed: int = Field(20240601, description="Seed for oracle trials and Hecke sampling")
    oracle_trials: int = Field(50, ge=1)
    hecke_samples: int = Field(500, ge=1)
    first_failure: bool = False

    log_level: str = "WARNING"
    log_json: bool = False
    metrics_file: Optional[Path] = None

    @field_validator("tables_dir", "metrics_file", mode="before")
    @classmethod
    def _empty_str_to_none(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip() == "":
            return None
        return value

    @property
    def resolved_tables_dir(self) -> Path:
        return self.tables_dir if self.tables_dir is not None else PACKAGED_TABLES_DIR


@lru_cache()
def get_settings() -> Settings:
    """Return cached application settings."""

    return Settings()


def settings_dict() -> dict[str, Any]:
    settings = get_settings()
    return settings.model_dump(mode="json")
