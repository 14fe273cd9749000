"""Pydantic models for chf-cli settings and per-command input.

Settings come from a YAML file, from ``CHF_*`` environment variables (a
``.env`` file is honored), or from defaults.

Example YAML:

```yaml
# ~/.config/chf-cli/settings.yaml
tolerance: 1.0e-9
depth_limit: 8
seed: 42
samples: 200
```
"""

import os
from pathlib import Path
from typing import Any

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, model_validator

from chf_cli.core.builtins import builtin
from chf_cli.core.ribbon_graph import DartId, EdgeLabeling, RibbonGraph, parse_graph, parse_labeling
from chf_cli.core.verify import VerifyOptions

CONFIG_DIR = Path.home() / ".config" / "chf-cli"
SETTINGS_FILE = CONFIG_DIR / "settings.yaml"

_ENV_KEYS = {
    "tolerance": "CHF_TOLERANCE",
    "depth_limit": "CHF_DEPTH_LIMIT",
    "closure_bound": "CHF_CLOSURE_BOUND",
    "seed": "CHF_SEED",
    "samples": "CHF_SAMPLES",
    "svg_width": "CHF_SVG_WIDTH",
}


class Settings(BaseModel):
    """Numerical limits and defaults shared by every command."""

    tolerance: float = Field(1e-9, gt=0, description="Float comparison tolerance")
    depth_limit: int = Field(8, ge=0, description="Largest allowed net depth")
    closure_bound: int = Field(10**6, ge=1, description="Largest monodromy group order computed")
    seed: int = Field(42, description="Seed of the randomized property suites")
    samples: int = Field(200, ge=1, description="Samples per randomized property")
    svg_width: int = Field(800, ge=100, description="SVG canvas width in pixels")

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from CHF_* environment variables; unset keys keep their defaults."""
        load_dotenv()

        data = {key: os.getenv(var) for key, var in _ENV_KEYS.items()}
        return cls.model_validate({k: v for k, v in data.items() if v})

    @classmethod
    def from_yaml(cls, path: str | Path) -> "Settings":
        """Load settings from a YAML file."""
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Settings file not found: {path}")

        with path.open() as f:
            data = yaml.safe_load(f) or {}

        return cls.model_validate(data)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "Settings":
        """An explicit file wins, then the user settings file, then the environment."""
        if path:
            return cls.from_yaml(path)
        if SETTINGS_FILE.exists():
            return cls.from_yaml(SETTINGS_FILE)
        return cls.from_env()

    def to_yaml(self, path: str | Path) -> None:
        """Write settings to a YAML file."""
        path = Path(path)
        with path.open("w") as f:
            yaml.dump(self.model_dump(mode="json"), f, default_flow_style=False, sort_keys=False)

    def verify_options(
        self, seed: int | None = None, samples: int | None = None, tolerance: float | None = None
    ) -> VerifyOptions:
        return VerifyOptions(
            seed=self.seed if seed is None else seed,
            samples=self.samples if samples is None else samples,
            tolerance=self.tolerance if tolerance is None else tolerance,
            depth_limit=self.depth_limit,
            closure_bound=self.closure_bound,
        )


class CommandConfig(BaseModel):
    """Inputs of one command invocation."""

    command: str = Field(..., description="Subcommand name")
    graph_path: Path | None = Field(None, description="Graph file (--graph)")
    builtin: str | None = Field(None, description="Builtin graph name (--builtin)")
    labeling_path: Path | None = Field(None, description="Labeling file (--z)")
    zero: bool = Field(False, description="Use z = 0 (--zero)")
    base: str | None = Field(None, description="Base dart override (--base)")
    depth: int = Field(3, ge=0, description="Net depth (--depth)")
    svg_path: Path | None = Field(None, description="SVG output (--svg)")
    out_path: Path | None = Field(None, description="Text output (--out)")
    tolerance: float = Field(1e-9, gt=0, description="Float tolerance (--tol)")

    @model_validator(mode="after")
    def check_sources(self) -> "CommandConfig":
        if (self.graph_path is None) == (self.builtin is None):
            raise ValueError("give exactly one of --graph or --builtin")
        if self.labeling_path is not None and self.zero:
            raise ValueError("--z and --zero are mutually exclusive")
        return self

    def load_graph(self) -> RibbonGraph:
        """Parse the graph source and apply the --base override."""
        if self.builtin is not None:
            graph = builtin(self.builtin)
        else:
            assert self.graph_path is not None
            graph = parse_graph(self.graph_path.read_text(encoding="utf-8"), self.graph_path.stem)
        if self.base is not None:
            graph = graph.with_base(graph.dart_id(self.base))
        return graph

    def load_labeling(self, graph: RibbonGraph) -> EdgeLabeling:
        """The --z file, or z = 0 when no labeling is given."""
        if self.labeling_path is None:
            return EdgeLabeling.zero(graph)
        return parse_labeling(self.labeling_path.read_text(encoding="utf-8"), graph)

    def base_dart(self, graph: RibbonGraph) -> DartId:
        return graph.base


EXAMPLE_SETTINGS = """# chf-cli settings
# Environment variables CHF_TOLERANCE, CHF_DEPTH_LIMIT, ... are used when no file exists.

# Tolerance for projective matrix comparison and cusp matching in float mode
tolerance: 1.0e-9

# Largest net depth accepted by `chf net`
depth_limit: 8

# Monodromy group orders above this bound are reported as unknown
closure_bound: 1000000

# Randomized property suites (`chf verify`)
seed: 42
samples: 200

# SVG canvas width in pixels
svg_width: 800
"""


def generate_example_settings(path: str | Path | None = None) -> str:
    """Generate an example settings file.

    Args:
        path: If provided, write the example to this path

    Returns:
        The example settings as a string
    """
    if path:
        path = Path(path)
        with path.open("w") as f:
            f.write(EXAMPLE_SETTINGS)
    return EXAMPLE_SETTINGS


def settings_schema() -> dict[str, Any]:
    """JSON schema of the settings file."""
    return Settings.model_json_schema()
