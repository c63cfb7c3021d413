"""Decorators that turn plain functions into ``knotgraph`` subcommands.

Usage::

    @command("brieskorn", help="H_1 of a Brieskorn manifold")
    @arguments(
        argument("weights", type=int, nargs=3),
    )
    def brieskorn(ctx: CommandContext) -> dict:
        ...

``@arguments`` must sit below ``@command``; it only records the argument
specifications on the function, ``@command`` reads them when it wraps and
registers the handler.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import TYPE_CHECKING

from knotgraph.protocols import ArgumentSpec, CommandWrapper, argument
from knotgraph.registry import CommandRegistry, get_registry

if TYPE_CHECKING:
    from knotgraph.protocols import Handler

logger = logging.getLogger("knotgraph")

ARGUMENTS_ATTRIBUTE = "__knotgraph_arguments__"

__all__ = ["argument", "arguments", "command", "create_command_wrapper"]


def arguments(*specs: ArgumentSpec) -> Callable[[Handler], Handler]:
    """Attach argument specifications to a handler.

    Parameters
    ----------
    *specs : ArgumentSpec
        Specifications built with :func:`knotgraph.protocols.argument`.

    Returns
    -------
    Callable
        Decorator returning the handler unchanged apart from the attribute.
    """

    def decorator(func: Handler) -> Handler:
        existing = list(getattr(func, ARGUMENTS_ATTRIBUTE, []))
        setattr(func, ARGUMENTS_ATTRIBUTE, [*specs, *existing])
        return func

    return decorator


def create_command_wrapper(
    func: Handler,
    name: str,
    help: str = "",  # noqa: A002
    specs: list[ArgumentSpec] | None = None,
) -> CommandWrapper:
    """Create a :class:`CommandWrapper` for ``func``.

    Parameters
    ----------
    func : Handler
        The handler to wrap.
    name : str
        Subcommand name.
    help : str
        One-line help text; defaults to the first docstring line.
    specs : list[ArgumentSpec] | None
        Argument specifications. When None, those recorded by
        :func:`arguments` are used.

    Returns
    -------
    CommandWrapper
        Wrapper instance configured for the provided function.

    Examples
    --------
    >>> def hello(ctx):
    ...     '''Say hello.'''
    ...     return {}
    >>> create_command_wrapper(hello, "hello").help
    'Say hello.'
    """
    if specs is None:
        specs = list(getattr(func, ARGUMENTS_ATTRIBUTE, []))
    if not help and func.__doc__:
        help = func.__doc__.strip().splitlines()[0]  # noqa: A001
    return CommandWrapper(func=func, name=name, help=help, arguments=specs)


def command(
    name: str,
    help: str = "",  # noqa: A002
    registry: CommandRegistry | None = None,
) -> Callable[[Handler], CommandWrapper]:
    """Register a handler as the subcommand ``name``.

    Parameters
    ----------
    name : str
        Subcommand name.
    help : str
        One-line help text.
    registry : CommandRegistry | None
        Target registry, the global one by default.

    Returns
    -------
    Callable
        Decorator returning the registered :class:`CommandWrapper`.
    """

    def decorator(func: Handler) -> CommandWrapper:
        wrapper = create_command_wrapper(func, name, help)
        (registry or get_registry()).register(wrapper)
        logger.debug("Registered subcommand '%s'", name)
        return wrapper

    return decorator
