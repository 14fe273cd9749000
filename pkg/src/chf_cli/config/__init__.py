"""Configuration and schema definitions for chf-cli."""

from chf_cli.config.schema import (
    CommandConfig,
    Settings,
    generate_example_settings,
)

__all__ = [
    "CommandConfig",
    "Settings",
    "generate_example_settings",
]
