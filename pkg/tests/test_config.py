"""Test configuration loading."""

from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from sahi_kernels.src.config import Config, load_config


class TestConfig:
    """Test defaults, environment and YAML overlays."""

    def test_defaults(self, monkeypatch):
        """Defaults without environment."""
        for name in ["SAHI_KERNELS_THREADS", "LOG_LEVEL", "SAHI_KERNELS_BOX", "SAHI_KERNELS_QUAD_POINTS", "OUTPUT_ROOT"]:
            monkeypatch.delenv(name, raising=False)
        config = load_config()
        assert config.threads == 1
        assert config.box_radius == 6
        assert config.quad_points == 1024
        assert config.output_root == Path("./reports")

    def test_output_path(self, tmp_path):
        """Relative outputs go under output_root, absolute ones stay put."""
        config = Config(output_root=tmp_path / "reports")
        assert config.output_path(Path("grid.csv")) == tmp_path / "reports" / "grid.csv"
        assert config.output_path(tmp_path / "elsewhere.csv") == tmp_path / "elsewhere.csv"

    def test_environment(self, monkeypatch):
        """Environment variables override defaults."""
        monkeypatch.setenv("SAHI_KERNELS_THREADS", "4")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        monkeypatch.setenv("SAHI_KERNELS_BOX", "3")
        config = load_config()
        assert config.threads == 4
        assert config.log_level == "DEBUG"
        assert config.box_radius == 3

    def test_yaml_overlay(self, tmp_path, monkeypatch):
        """YAML values win over the environment."""
        monkeypatch.setenv("SAHI_KERNELS_THREADS", "4")
        config_file = tmp_path / "config.yaml"
        config_file.write_text(yaml.safe_dump({"threads": 2, "quad_points": 256, "seed": 7}))
        config = load_config(config_file)
        assert config.threads == 2
        assert config.quad_points == 256
        assert config.seed == 7

    def test_validation(self):
        """Invalid values are rejected."""
        with pytest.raises(ValidationError):
            Config(quad_points=1000)
        with pytest.raises(ValidationError):
            Config(log_level="LOUD")
        with pytest.raises(ValidationError):
            Config(threads=0)
