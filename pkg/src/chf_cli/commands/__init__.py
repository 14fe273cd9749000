"""Command modules for chf-cli CLI."""

from chf_cli.commands import builtins, generators, info, init, net, system, verify

__all__ = ["builtins", "generators", "info", "init", "net", "system", "verify"]
