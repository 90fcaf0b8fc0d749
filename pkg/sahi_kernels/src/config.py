"""Configuration management for sahi-kernels runs."""

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator


class Config(BaseModel):
    """Configuration model for library defaults and CLI runs."""

    threads: int = Field(default=1, ge=1, description="Worker threads for scans and grids")
    log_level: str = Field(default="WARNING", description="Logging level")
    box_radius: int = Field(default=6, ge=1, description="Signature box radius M for scans")
    quad_points: int = Field(default=1024, description="Midpoint nodes per dimension")
    quad_tolerance: float = Field(default=1e-6, gt=0, description="Quadrature warning threshold")
    pole_epsilon: float = Field(default=1e-9, gt=0, description="Distance at which Γ arguments count as poles")
    mc_shifts: int = Field(default=16, ge=2, description="Random shifts of the n=3 lattice rule")
    seed: int = Field(default=20240101, description="Seed for every random choice")
    output_root: Path = Field(default=Path("./reports"), description="Output root directory")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate logging level."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of: {valid_levels}")
        return v.upper()

    @field_validator("quad_points")
    @classmethod
    def validate_quad_points(cls, v: int) -> int:
        """Richardson estimates halve N, so it must be a power of two."""
        if v < 8 or v & (v - 1):
            raise ValueError("quad_points must be a power of two ≥ 8")
        return v

    def output_path(self, path: Path) -> Path:
        """Relative output paths land under output_root; absolute ones are kept."""
        return self.output_root / path


def load_config(config_file: Optional[Path] = None) -> Config:
    """Load configuration from environment, .env and an optional YAML file."""

    # Load environment variables
    load_dotenv()

    config_data = {
        "threads": int(os.getenv("SAHI_KERNELS_THREADS", "1")),
        "log_level": os.getenv("LOG_LEVEL", "WARNING"),
        "box_radius": int(os.getenv("SAHI_KERNELS_BOX", "6")),
        "quad_points": int(os.getenv("SAHI_KERNELS_QUAD_POINTS", "1024")),
        "output_root": Path(os.getenv("OUTPUT_ROOT", "./reports")),
    }

    # Overlay the YAML file if provided
    if config_file and config_file.exists():
        with open(config_file, "r", encoding="utf-8") as f:
            yaml_config = yaml.safe_load(f) or {}
            config_data.update(yaml_config)

    return Config(**config_data)
