"""Shared data structures for the command layer.

Kept apart from :mod:`knotgraph.registry` and :mod:`knotgraph.decorators` to
avoid circular imports between them.
"""

from __future__ import annotations

import argparse
import inspect
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from knotgraph.context import CommandContext

Handler = Callable[["CommandContext"], dict[str, Any]]


@dataclass(frozen=True)
class ArgumentSpec:
    """Positional and keyword arguments of one ``add_argument`` call."""

    flags: tuple[str, ...]
    options: tuple[tuple[str, Any], ...] = ()

    def add_to(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(*self.flags, **dict(self.options))


def argument(*flags: str, **options: Any) -> ArgumentSpec:
    """Describe a subcommand argument with ``argparse`` vocabulary.

    Examples
    --------
    >>> spec = argument("--k", type=int, required=True)
    >>> spec.flags
    ('--k',)
    """
    return ArgumentSpec(tuple(flags), tuple(options.items()))


@dataclass
class CommandInfo:
    """Metadata about a registered subcommand.

    Attributes
    ----------
    name : str
        Subcommand name as typed on the command line.
    help : str
        One-line help shown by ``knotgraph --help``.
    description : str | None
        Handler docstring, shown by ``knotgraph <name> --help``.
    arguments : list[str]
        Flags and positional names the subcommand accepts.
    """

    name: str
    help: str
    description: str | None
    arguments: list[str]


@dataclass
class CommandWrapper:
    """Wrapper for a subcommand handler with its argument specifications.

    Attributes
    ----------
    func : Handler
        The handler, called with a :class:`~knotgraph.context.CommandContext`.
    name : str
        Subcommand name to register.
    help : str
        One-line help text.
    arguments : list[ArgumentSpec]
        Arguments added to the subcommand parser, in declaration order.
    """

    func: Handler
    name: str
    help: str = ""
    arguments: list[ArgumentSpec] = field(default_factory=list)

    def __post_init__(self) -> None:
        """Initialize wrapper attributes after dataclass init."""
        object.__setattr__(self, "__name__", getattr(self.func, "__name__", self.name))
        object.__setattr__(
            self, "__qualname__", getattr(self.func, "__qualname__", self.name)
        )

    def __call__(self, ctx: CommandContext) -> dict[str, Any]:
        """Make the wrapper callable."""
        return self.func(ctx)

    def configure(self, parser: argparse.ArgumentParser) -> None:
        """Add this subcommand's arguments to ``parser``."""
        for spec in self.arguments:
            spec.add_to(parser)

    def info(self) -> CommandInfo:
        return CommandInfo(
            name=self.name,
            help=self.help,
            description=inspect.getdoc(self.func),
            arguments=[flag for spec in self.arguments for flag in spec.flags],
        )
