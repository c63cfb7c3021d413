"""Subcommand registry for the ``knotgraph`` command."""

from __future__ import annotations

from typing import TYPE_CHECKING

from knotgraph.exceptions import InvalidArgumentError

if TYPE_CHECKING:
    from knotgraph.protocols import CommandInfo, CommandWrapper


class CommandRegistry:
    """Registry of subcommand handlers.

    Attributes
    ----------
    _commands : dict[str, CommandWrapper]
        Mapping of subcommand names to their wrappers, in registration order.
    """

    def __init__(self) -> None:
        """Initialize the registry."""
        self._commands: dict[str, CommandWrapper] = {}

    def register(self, wrapper: CommandWrapper) -> None:
        """Register a subcommand.

        Parameters
        ----------
        wrapper : CommandWrapper
            The wrapped handler to register.

        Raises
        ------
        InvalidArgumentError
            If another handler already uses the same name.
        """
        existing = self._commands.get(wrapper.name)
        if existing is not None and existing.func is not wrapper.func:
            raise InvalidArgumentError(
                "command", f"'{wrapper.name}' is already registered"
            )
        self._commands[wrapper.name] = wrapper

    def get(self, name: str) -> CommandWrapper | None:
        """Get a specific subcommand.

        Parameters
        ----------
        name : str
            Subcommand name.

        Returns
        -------
        CommandWrapper | None
            The wrapper if found, None otherwise.
        """
        return self._commands.get(name)

    def has(self, name: str) -> bool:
        return name in self._commands

    def names(self) -> list[str]:
        """List registered subcommand names in registration order."""
        return list(self._commands)

    def describe(self) -> list[CommandInfo]:
        return [wrapper.info() for wrapper in self._commands.values()]

    def __iter__(self):
        return iter(self._commands.values())

    def __len__(self) -> int:
        return len(self._commands)


# Global registry instance
_registry = CommandRegistry()


def get_registry() -> CommandRegistry:
    """Get the global subcommand registry.

    Returns
    -------
    CommandRegistry
        The global registry instance.
    """
    return _registry
