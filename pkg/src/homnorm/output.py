#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Output formatting for homnorm: themed consoles, JSON emission and rich tables.
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence

import click
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme

from .groups import FiniteGroup
from .reports import Report

DARK_THEME = {
    "info": "cyan",
    "success": "green",
    "warning": "yellow",
    "error": "red",
    "highlight": "magenta",
    "group": "bright_blue",
    "index": "bright_magenta",
    "value": "bright_white",
    "command": "cyan",
    "option": "yellow",
    "usage": "green",
}

LIGHT_THEME = {
    "info": "blue",
    "success": "green",
    "warning": "yellow",
    "error": "red",
    "highlight": "magenta",
    "group": "blue",
    "index": "purple",
    "value": "black",
    "command": "blue",
    "option": "yellow",
    "usage": "green",
}


def theme_for(name: Optional[str] = None) -> Theme:
    """The named theme, else $HOMNORM_THEME, else dark."""
    name = (name or os.environ.get("HOMNORM_THEME", "dark")).lower()
    return Theme(LIGHT_THEME if name == "light" else DARK_THEME)


def make_console(theme: Optional[str] = None, stderr: bool = False) -> Console:
    return Console(theme=theme_for(theme), stderr=stderr)


def output_json(payload: Any, output_file: Optional[str] = None) -> None:
    """
    Write a JSON payload to a file, or to stdout when no file is given.

    Args:
        payload: anything json.dumps accepts, or JSON text
        output_file: optional path; parent directories are created
    """
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=False)
    if output_file:
        path = Path(output_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


def display_report(console: Console, report: Report, title: Optional[str] = None) -> None:
    """A success line for an empty report, a violations table otherwise; notes follow."""
    title = title or report.name
    if report.ok:
        console.print(f"[success]{title}: pass[/success]")
    else:
        table = Table(title=f"{title}: {len(report.violations)} violation(s)", box=box.ROUNDED)
        table.add_column("Check", style="highlight")
        table.add_column("Level", justify="right")
        table.add_column("Witness", style="index")
        table.add_column("Detail")
        for v in report.violations:
            table.add_row(v.check, "" if v.level is None else str(v.level), str(tuple(v.witness)), v.detail)
        console.print(table)
    if report.notes:
        notes = Table(show_header=False, box=None)
        notes.add_column("Note", style="info")
        notes.add_column("Value")
        for key, value in report.notes.items():
            notes.add_row(key, str(value))
        console.print(notes)


def display_table(
    console: Console,
    rows: Sequence[Sequence[Any]],
    headers: Sequence[str],
    title: Optional[str] = None,
) -> None:
    table = Table(title=title, box=box.ROUNDED)
    for i, header in enumerate(headers):
        table.add_column(header, style="group" if i == 0 else None)
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    console.print(table)


def display_action_table(
    console: Console,
    act: Sequence[Sequence[int]],
    rows: FiniteGroup,
    cols: FiniteGroup,
    title: str,
) -> None:
    """act[r][c] as a grid, rows and columns labelled by group elements."""
    table = Table(title=title, box=box.SIMPLE)
    table.add_column("", style="group")
    for c in cols.elements():
        table.add_column(cols.label(c), justify="right")
    for r, line in enumerate(act):
        table.add_row(rows.label(r), *(cols.label(v) for v in line))
    console.print(table)


def display_summary(console: Console, title: str, items: Dict[str, Any], style: str = "info") -> None:
    body = "\n".join(f"[highlight]{key}[/highlight]: {value}" for key, value in items.items())
    console.print(Panel(body, title=title, border_style=style, expand=False))


def display_failures(console: Console, failures: Iterable[Dict[str, Any]], limit: int = 20) -> None:
    failures = list(failures)
    if not failures:
        return
    table = Table(title=f"Failures ({len(failures)})", box=box.ROUNDED)
    for header in ("Check", "Source", "Target", "Map", "Witness"):
        table.add_column(header)
    for f in failures[:limit]:
        table.add_row(
            f["check"], f["source"], f["target"], str(f.get("map", "")), str(f.get("witness", "")),
        )
    console.print(table)
    if len(failures) > limit:
        console.print(f"[warning]... {len(failures) - limit} more in the JSON report[/warning]")


def group_rows(groups: Iterable[FiniteGroup]) -> List[List[Any]]:
    return [[g.name, g.order, "yes" if g.is_abelian else "no"] for g in groups]
