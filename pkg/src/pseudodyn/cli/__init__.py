"""Command-line interface: ``pseudodyn <command> [options]``."""

from pseudodyn.cli.app import cli, main

__all__ = ["cli", "main"]
