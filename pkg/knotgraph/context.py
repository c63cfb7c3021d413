"""Subcommand execution context."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from typing import Any

from knotgraph.atlas import KnotAtlas
from knotgraph.config import KnotGraphConfig
from knotgraph.utils import create_report


@dataclass
class CommandContext:
    """Context for subcommand execution.

    Attributes
    ----------
    command : str
        Name of the running subcommand.
    args : argparse.Namespace
        Parsed command line.
    config : KnotGraphConfig
        Configuration with the command-line overrides applied.
    atlas : KnotAtlas
        Knot atlas in effect (built-in table plus any ``--atlas`` file).

    Examples
    --------
    >>> @command("hello")
    ... def hello(ctx: CommandContext) -> dict:
    ...     return ctx.report(results={"workers": ctx.config.workers})
    """

    command: str
    args: argparse.Namespace
    config: KnotGraphConfig
    atlas: KnotAtlas

    @property
    def workers(self) -> int:
        return self.config.workers

    def report(
        self,
        inputs: dict[str, Any] | None = None,
        results: dict[str, Any] | None = None,
        provenance: list[Any] | None = None,
        verdict: str = "ok",
    ) -> dict[str, Any]:
        """Build this subcommand's report with :func:`knotgraph.utils.create_report`."""
        return create_report(self.command, inputs, results, provenance, verdict)
