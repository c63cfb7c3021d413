"""Tests for the subcommand decorators.

Coverage: command, arguments and create_command_wrapper.
"""

from __future__ import annotations

import argparse

import pytest

from knotgraph.decorators import argument, arguments, command, create_command_wrapper
from knotgraph.protocols import CommandWrapper
from knotgraph.registry import CommandRegistry


@pytest.mark.unit
class TestCreateCommandWrapper:
    """Test create_command_wrapper()."""

    def test_help_from_docstring(self):
        """Should take the first docstring line as help."""

        def hello(ctx):
            """Say hello.

            More text.
            """
            return {}

        wrapper = create_command_wrapper(hello, "hello")
        assert wrapper.help == "Say hello."
        assert wrapper.__name__ == "hello"

    def test_explicit_help_wins(self):
        """Should keep explicit help text."""
        wrapper = create_command_wrapper(lambda ctx: {}, "x", help="explicit")
        assert wrapper.help == "explicit"

    def test_explicit_specs(self):
        """Should use the given specifications over recorded ones."""
        wrapper = create_command_wrapper(lambda ctx: {}, "x", specs=[argument("--k")])
        assert [spec.flags for spec in wrapper.arguments] == [("--k",)]


@pytest.mark.unit
class TestCommandDecorator:
    """Test @command and @arguments together."""

    def test_registers_wrapper(self):
        """Should register the handler and return its wrapper."""
        registry = CommandRegistry()

        @command("hello", help="greet", registry=registry)
        @arguments(argument("name"), argument("--times", type=int, default=1))
        def hello(ctx):
            return {"name": ctx}

        assert isinstance(hello, CommandWrapper)
        assert registry.get("hello") is hello
        assert hello("ctx") == {"name": "ctx"}

    def test_arguments_configure_parser(self):
        """Should add the recorded arguments in declaration order."""
        registry = CommandRegistry()

        @command("hello", registry=registry)
        @arguments(argument("name"), argument("--times", type=int, default=1))
        def hello(ctx):
            return {}

        parser = argparse.ArgumentParser()
        hello.configure(parser)
        args = parser.parse_args(["knot", "--times", "3"])
        assert (args.name, args.times) == ("knot", 3)

    def test_stacked_arguments(self):
        """Should keep outer @arguments specs before inner ones."""

        @arguments(argument("--a"))
        @arguments(argument("--b"))
        def handler(ctx):
            return {}

        wrapper = create_command_wrapper(handler, "h")
        assert [spec.flags[0] for spec in wrapper.arguments] == ["--a", "--b"]
