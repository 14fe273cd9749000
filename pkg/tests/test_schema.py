"""Tests for configuration schema validation."""

from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from chf_cli.config.schema import (
    EXAMPLE_SETTINGS,
    CommandConfig,
    Settings,
    generate_example_settings,
    settings_schema,
)
from chf_cli.core.builtins import BUILTIN_TEXTS
from chf_cli.core.errors import GraphValidationError, UnknownBuiltinError


class TestSettings:
    """Tests for the Settings model."""

    def test_defaults(self) -> None:
        """Test default values."""
        settings = Settings()
        assert settings.tolerance == 1e-9
        assert settings.depth_limit == 8
        assert settings.seed == 42
        assert settings.samples == 200

    def test_negative_tolerance_rejected(self) -> None:
        """Test tolerance must be positive."""
        with pytest.raises(ValidationError):
            Settings(tolerance=-1.0)

    def test_zero_samples_rejected(self) -> None:
        with pytest.raises(ValidationError):
            Settings(samples=0)

    def test_from_yaml(self, tmp_path: Path) -> None:
        """Test loading from a YAML file."""
        path = tmp_path / "settings.yaml"
        path.write_text("seed: 7\ndepth_limit: 5\n")
        settings = Settings.from_yaml(path)
        assert settings.seed == 7
        assert settings.depth_limit == 5
        assert settings.samples == 200

    def test_from_yaml_empty_file(self, tmp_path: Path) -> None:
        path = tmp_path / "settings.yaml"
        path.write_text("")
        assert Settings.from_yaml(path) == Settings()

    def test_from_yaml_missing(self, tmp_path: Path) -> None:
        with pytest.raises(FileNotFoundError, match="Settings file not found"):
            Settings.from_yaml(tmp_path / "nope.yaml")

    def test_from_env(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test CHF_* variables override defaults."""
        monkeypatch.setenv("CHF_SEED", "99")
        monkeypatch.setenv("CHF_TOLERANCE", "1e-6")
        settings = Settings.from_env()
        assert settings.seed == 99
        assert settings.tolerance == 1e-6

    def test_load_prefers_explicit_file(
        self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("CHF_SEED", "99")
        path = tmp_path / "settings.yaml"
        path.write_text("seed: 3\n")
        assert Settings.load(path).seed == 3
        assert Settings.load().seed == 99

    def test_to_yaml_round_trip(self, tmp_path: Path) -> None:
        path = tmp_path / "out.yaml"
        Settings(seed=11, svg_width=400).to_yaml(path)
        assert Settings.from_yaml(path) == Settings(seed=11, svg_width=400)

    def test_verify_options(self) -> None:
        options = Settings(seed=5, samples=10).verify_options(samples=3)
        assert options.seed == 5
        assert options.samples == 3
        assert options.depth_limit == 8


class TestCommandConfig:
    """Tests for per-command input validation."""

    def test_builtin_source(self) -> None:
        config = CommandConfig(command="info", builtin="theta")
        graph = config.load_graph()
        assert graph.name == "theta"
        assert config.load_labeling(graph).is_zero

    def test_requires_one_source(self) -> None:
        """Test exactly one of --graph and --builtin."""
        with pytest.raises(ValidationError, match="exactly one"):
            CommandConfig(command="info")
        with pytest.raises(ValidationError, match="exactly one"):
            CommandConfig(command="info", builtin="theta", graph_path=Path("g.txt"))

    def test_zero_and_labeling_exclusive(self) -> None:
        with pytest.raises(ValidationError, match="mutually exclusive"):
            CommandConfig(command="net", builtin="theta", zero=True, labeling_path=Path("z.txt"))

    def test_negative_depth_rejected(self) -> None:
        with pytest.raises(ValidationError):
            CommandConfig(command="net", builtin="theta", depth=-1)

    def test_graph_file(self, tmp_path: Path) -> None:
        path = tmp_path / "tet.graph"
        path.write_text(BUILTIN_TEXTS["tetrahedron"])
        graph = CommandConfig(command="info", graph_path=path).load_graph()
        assert graph.name == "tet"
        assert graph.face_count == 4

    def test_labeling_file(self, tmp_path: Path) -> None:
        path = tmp_path / "z.txt"
        path.write_text("A 1/2\n")
        config = CommandConfig(command="generators", builtin="theta", labeling_path=path)
        z = config.load_labeling(config.load_graph())
        assert not z.is_zero

    def test_base_override(self) -> None:
        config = CommandConfig(command="info", builtin="theta", base="A'")
        graph = config.load_graph()
        assert config.base_dart(graph) == graph.dart_id("A'")

    def test_unknown_base(self) -> None:
        with pytest.raises(GraphValidationError):
            CommandConfig(command="info", builtin="theta", base="Z").load_graph()

    def test_unknown_builtin(self) -> None:
        with pytest.raises(UnknownBuiltinError):
            CommandConfig(command="info", builtin="octahedron").load_graph()


class TestExampleSettings:
    """Tests for the example settings file."""

    def test_example_is_valid(self) -> None:
        settings = Settings.model_validate(yaml.safe_load(EXAMPLE_SETTINGS))
        assert settings == Settings()

    def test_generate_writes_file(self, tmp_path: Path) -> None:
        path = tmp_path / "settings.yaml"
        text = generate_example_settings(path)
        assert path.read_text() == text

    def test_schema_lists_fields(self) -> None:
        schema = settings_schema()
        assert "tolerance" in schema["properties"]
        assert "closure_bound" in schema["properties"]
