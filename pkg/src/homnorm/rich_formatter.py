#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Rich formatter for Click commands

Replaces click's plain --help with a themed rendering: usage line, options
with defaults, subcommands for groups, and the Example block of the help text.
"""

from functools import wraps
from typing import Callable

import click
from rich.console import Console
from rich.table import Table

from .output import make_console

_local_console = None


def get_console() -> Console:
    """
    The CLI console when the CLI module is loaded, else a local themed one.
    """
    global _local_console
    try:
        from .homnorm import console
        return console
    except (ImportError, AttributeError):
        if _local_console is None:
            _local_console = make_console()
        return _local_console


def _usage(ctx: click.Context) -> str:
    command = ctx.command
    parts = ["[usage]Usage:[/usage]", ctx.command_path or command.name or ""]
    for param in command.params:
        if isinstance(param, click.Argument):
            name = (param.name or "").upper()
            parts.append(name if param.required else f"[{name}]")
    parts.append("[OPTIONS]")
    if isinstance(command, click.Group) and command.list_commands(ctx):
        parts.append("COMMAND [ARGS]...")
    return " ".join(parts)


def show_rich_help(ctx: click.Context, param: click.Parameter, value: bool) -> bool:
    """
    Show rich help for a Click command.

    Args:
        ctx: Click context
        param: Click parameter
        value: Parameter value

    Returns:
        Boolean value passed in
    """
    if not value or ctx.resilient_parsing:
        return value

    console = get_console()
    command = ctx.command

    console.print(f"\n[bold]{(command.name or '').upper()}[/bold]", style="highlight")
    help_text = command.help or ""
    description, _, example = help_text.partition("Example:")
    if description.strip():
        console.print(f"\n{description.strip()}\n")
    console.print(_usage(ctx), highlight=False)

    options = [p for p in command.params if isinstance(p, click.Option)]
    if options:
        table = Table(show_header=False, box=None)
        table.add_column("Option", style="option")
        table.add_column("Description")
        for option in options:
            text = option.help or ""
            if option.default not in (None, "", False) and not option.is_flag:
                text += f" [default: {option.default}]"
            table.add_row(", ".join(option.opts), text)
        console.print("\n[bold]Options[/bold]")
        console.rule()
        console.print(table)

    if isinstance(command, click.Group):
        names = command.list_commands(ctx)
        if names:
            table = Table(show_header=False, box=None)
            table.add_column("Command", style="command")
            table.add_column("Description")
            for name in sorted(names):
                cmd = command.get_command(ctx, name)
                table.add_row(name, cmd.get_short_help_str() if cmd else "")
            console.print("\n[bold]Commands[/bold]")
            console.rule()
            console.print(table)
            console.print("\n[info]Run 'homnorm COMMAND --help' for more information on a command.[/info]")

    if example.strip():
        console.print("\n[bold]Examples[/bold]")
        console.rule()
        console.print(example.rstrip(), highlight=False)

    ctx.exit()


def add_rich_help_option(f: Callable) -> Callable:
    """
    Replace --help on a Click command with the rich rendering.

    Args:
        f: Function to decorate

    Returns:
        Decorated function
    """
    @wraps(f)
    def decorator(*args, **kwargs):
        return f(*args, **kwargs)

    return click.option(
        "--help",
        is_flag=True,
        expose_value=False,
        is_eager=True,
        help="Show this message and exit.",
        callback=show_rich_help,
    )(decorator)
