#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
homnorm - homotopy normality for finite groups, from the command line

Decides whether a group homomorphism carries a crossed-module structure,
builds bar constructions, nerves, power constructions and the simplicial
group of a crossed module, checks Segal conditions, computes Moore homotopy
groups and rigidifies discrete homotopy actions.

Usage:
    homnorm normal-check <hom.json> [--budget m]
    homnorm bar [<gset.json>] [--hom <hom.json>] [--levels k]
    homnorm nerve <group> [--levels k]
    homnorm cech <map.json> [--levels k]
    homnorm segal <sset.json>
    homnorm gamma <cm.json> [--levels k]
    homnorm homotopy <cm.json | gamma.json> [--levels k]
    homnorm from-bar <gset.json> [--levels k]
    homnorm rigidify <action.json>
    homnorm roundtrip <gset.json> [--levels k]
    homnorm catalog [--max-order n] [--levels k] [--abelian-only] [--workers n]
    homnorm groups

Exit codes: 0 the property holds, 1 it fails, 2 the input or configuration is unusable.
"""

import functools
import json
import logging
import sys
import traceback
from pathlib import Path
from typing import Any, Dict, Optional

import click
import yaml
from pydantic import ValidationError
from rich.logging import RichHandler

from . import __version__
from .actions import from_bar, rigidify, roundtrip_check
from .bar import bar, bar_of_hom, nerve, recover_group_from_nerve, segal_check
from .catalog import catalog as catalog_entries
from .catalog import identify
from .crossed import (
    equivariant_iso_check,
    gamma_from_cm,
    moore_homotopy,
    search_crossed_module,
    two_type_invariants,
    verify_simplicial_group,
)
from .errors import AxiomFailure, ConfigError, HomnormError, InputError, PropertyFailure
from .config import Settings, load_settings
from .groups import image_normal
from .models import (
    CrossedModuleModel,
    FinSetMapModel,
    GammaModel,
    HomModel,
    HomotopyActionModel,
    RightGSetModel,
    SimplicialSetModel,
)
from .output import (
    display_action_table,
    display_failures,
    display_report,
    display_summary,
    display_table,
    group_rows,
    make_console,
    output_json,
    theme_for,
)
from .reports import Report
from .rich_formatter import add_rich_help_option
from .runner import RunParameters, run_catalog, summarize
from .serialization import (
    crossed_module_from_model,
    dumps,
    gamma_to_model,
    load,
    read_group,
    to_model,
)
from .simplicial import cech_power, verify_simplicial

console = make_console()
err_console = make_console(stderr=True)

logger = logging.getLogger(__name__)


def _configure_logging(debug: bool) -> None:
    root = logging.getLogger("homnorm")
    root.handlers.clear()
    root.addHandler(RichHandler(console=err_console, show_path=False, rich_tracebacks=debug, markup=False))
    root.setLevel(logging.DEBUG if debug else logging.WARNING)
    root.propagate = False


def _fail(message: str, code: int, is_debug: bool, witness: Any = None) -> None:
    console.print(f"[error]{message}[/error]", highlight=False)
    if witness is not None:
        console.print(f"[warning]witness:[/warning] {witness}", highlight=False)
    if is_debug:
        console.print("[bold yellow]DEBUG: Stack trace[/bold yellow]")
        console.print(traceback.format_exc(), highlight=False)
    sys.exit(code)


def handle_errors(func):
    """
    Decorator mapping homnorm errors to exit codes.

    Property failures exit 1. Malformed input, unreadable files and bad
    configuration exit 2. With --debug the stack trace is shown as well.

    Example:
        >>> @handle_errors
        ... def segal_command(path):
        ...     ...
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context(silent=True)
        is_debug = bool(ctx and isinstance(ctx.obj, dict) and ctx.obj.get("DEBUG"))
        if is_debug:
            logger.debug("executing %s with %s", func.__name__, kwargs)
        try:
            return func(*args, **kwargs)
        except PropertyFailure as e:
            _fail(f"{type(e).__name__}: {e}", 1, is_debug, e.witness)
        except (InputError, ConfigError) as e:
            _fail(f"Input error ({type(e).__name__}): {e}", 2, is_debug, e.witness)
        except ValidationError as e:
            _fail(f"Malformed input file: {e}", 2, is_debug)
        except (json.JSONDecodeError, yaml.YAMLError) as e:
            _fail(f"Unreadable input: {e}", 2, is_debug)
        except OSError as e:
            _fail(f"File operation error: {e}", 2, is_debug)
        except HomnormError as e:
            _fail(f"{type(e).__name__}: {e}", 2, is_debug, e.witness)
        except Exception as e:
            _fail(f"Unexpected error: {e}", 2, is_debug)
    return wrapper


def _settings(**overrides: Any) -> Settings:
    ctx = click.get_current_context()
    config = ctx.obj.get("CONFIG") if isinstance(ctx.obj, dict) else None
    return load_settings(config, overrides)


def _emit(value: Any, fmt: str, out: Optional[str]) -> None:
    """File content goes to --out when given, and to stdout in json format."""
    text = value if isinstance(value, str) else dumps(value)
    if out:
        output_json(text, out)
        if fmt == "text":
            console.print(f"[success]Wrote {out}[/success]")
    elif fmt == "json":
        output_json(text)


def _load_crossed_module(path: str):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict) and "crossed_module" in data:
        model = GammaModel.model_validate(data).crossed_module
    else:
        model = CrossedModuleModel.model_validate(data)
    return crossed_module_from_model(model, Path(path).parent)


def output_options(f):
    f = click.option("--out", "out", type=click.Path(dir_okay=False), help="Write the result file here")(f)
    f = click.option(
        "--format", "fmt", type=click.Choice(["text", "json"]), default="text", help="Output format"
    )(f)
    return f


def levels_option(f):
    return click.option("--levels", "-k", type=int, help="Truncation level (default from settings: 4)")(f)


def _theme_name(flag: Optional[str], config_path: Optional[str]) -> str:
    """The --theme flag, else the configured theme. A broken config is reported by the command."""
    if flag:
        return flag
    try:
        return load_settings(config_path).theme
    except ConfigError:
        return "dark"


@click.group(name="homnorm")
@click.version_option(version=__version__)
@click.option("--debug", is_flag=True, help="Enable debug logging and stack traces.")
@click.option("--theme", type=click.Choice(["dark", "light"]), help="Color theme")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="YAML settings file")
@add_rich_help_option
@click.pass_context
def cli(ctx, debug=False, theme=None, config_path=None):
    """homnorm - homotopy normality of finite group maps"""
    ctx.ensure_object(dict)
    ctx.obj["DEBUG"] = debug
    ctx.obj["CONFIG"] = config_path
    _configure_logging(debug)
    chosen = theme_for(_theme_name(theme, config_path))
    for target in (console, err_console):
        target.push_theme(chosen)
        ctx.call_on_close(target.pop_theme)
    if debug:
        console.print("[bold red]Debug mode enabled.[/bold red]")


@cli.command("normal-check")
@click.argument("hom_file", type=click.Path(dir_okay=False))
@click.option("--budget", type=float, help="Cap on |gens G| * log2 |Aut N| for the action search")
@output_options
@add_rich_help_option
@handle_errors
def normal_check_command(hom_file, budget, fmt, out):
    """
    Decide whether a homomorphism N -> G carries a crossed-module structure.

    Exits 0 and emits the certificate when it does, 1 when it does not.

    Example:
        homnorm normal-check a3_s3.json --out certificate.json
    """
    settings = _settings(budget=budget)
    f = load(hom_file, HomModel)
    search = search_crossed_module(f, settings.budget)
    payload: Dict[str, Any] = {
        "verdict": "normal" if search.normal else "not homotopy-normal at pi_0",
        "injective": f.is_injective,
        "image_normal": image_normal(f),
        "search": search.to_dict(),
    }
    if search.certificate is not None:
        payload["certificate"] = to_model(search.certificate).model_dump(exclude_none=True)
        if out:
            output_json(dumps(search.certificate), out)
    if fmt == "json":
        output_json(payload)
    else:
        stats = {key: value for key, value in search.to_dict().items() if key != "normal"}
        if search.certificate is not None:
            console.print(f"[success]{f.source.name or 'N'} -> {f.target.name or 'G'} is homotopy normal[/success]")
            display_summary(console, "Search", stats, "success")
            display_action_table(console, search.certificate.action.act, f.target, f.source, "Action g.n")
            if out:
                console.print(f"[success]Certificate written to {out}[/success]")
        else:
            console.print("[error]not homotopy-normal at π₀[/error]")
            display_summary(console, "Search", stats, "error")
    if not search.normal:
        sys.exit(1)


@cli.command("bar")
@click.argument("gset_file", required=False, type=click.Path(dir_okay=False))
@click.option("--hom", "hom_file", type=click.Path(dir_okay=False), help="Build Bar(G, N) of a homomorphism file instead")
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def bar_command(gset_file, hom_file, levels, fmt, out):
    """
    Bar construction of a right G-set file, or of a homomorphism with --hom.

    Example:
        homnorm bar swap.json --levels 3 --out bar.json
    """
    if bool(gset_file) == bool(hom_file):
        raise InputError("give either a G-set file or --hom, not both")
    k = _settings(levels=levels).levels
    if hom_file:
        complex_ = bar_of_hom(load(hom_file, HomModel), k)
    else:
        x = load(gset_file, RightGSetModel)
        complex_ = bar(x, x.group, k)
    _emit_simplicial(complex_.underlying, "bar", fmt, out)


@cli.command("nerve")
@click.argument("group")
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def nerve_command(group, levels, fmt, out):
    """
    Nerve of a group given by catalog name or group file.

    Example:
        homnorm nerve Z2 --levels 3
    """
    k = _settings(levels=levels).levels
    _emit_simplicial(nerve(read_group(group), k).underlying, "nerve", fmt, out)


@cli.command("cech")
@click.argument("map_file", type=click.Path(dir_okay=False))
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def cech_command(map_file, levels, fmt, out):
    """
    Power construction of a finite-set map file {"domain", "codomain", "map"}.

    Example:
        homnorm cech map.json --levels 3
    """
    k = _settings(levels=levels).levels
    _emit_simplicial(cech_power(load(map_file, FinSetMapModel), k), "cech", fmt, out)


def _emit_simplicial(s, name: str, fmt: str, out: Optional[str]) -> None:
    report = verify_simplicial(s)
    if not report.ok:
        first = report.violations[0]
        raise AxiomFailure(f"constructed {name} complex fails {first.check}", first.witness)
    _emit(s, fmt, out)
    if fmt == "text":
        display_table(console, [[m, n] for m, n in enumerate(s.level_sizes)], ["Level", "Simplices"], title=name)
        display_report(console, report)


@cli.command("segal")
@click.argument("sset_file", type=click.Path(dir_okay=False))
@output_options
@add_rich_help_option
@handle_errors
def segal_command(sset_file, fmt, out):
    """
    Check the reduced Segal conditions of a simplicial-set file.

    Example:
        homnorm segal nerve_s3.json
    """
    s = load(sset_file, SimplicialSetModel)
    result = segal_check(s)
    payload = result.to_dict()
    if result.ok and s.truncation >= 3:
        recovered = recover_group_from_nerve(s)
        payload["recovered_group"] = {"order": recovered.order, "identified_as": identify(recovered)}
    if out:
        output_json(payload, out)
    if fmt == "json":
        output_json(payload)
    else:
        display_summary(console, "Segal", {
            "basepoint": result.basepoint_ok,
            **{f"segal level {n}": ok for n, ok in result.segal_ok.items()},
            "group-like": result.pi0_group_ok,
        }, "success" if result.ok else "error")
        display_report(console, result.report)
        if "recovered_group" in payload:
            info = payload["recovered_group"]
            console.print(f"[info]level 1 is a group of order {info['order']} {info['identified_as']}[/info]")
    if not result.ok:
        sys.exit(1)


@cli.command("gamma")
@click.argument("cm_file", type=click.Path(dir_okay=False))
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def gamma_command(cm_file, levels, fmt, out):
    """
    Build the simplicial group of a crossed-module file and verify it.

    Checks the simplicial-group axioms and the equivariant isomorphism with Bar(G, N).

    Example:
        homnorm gamma certificate.json --levels 4 --out gamma.json
    """
    settings = _settings(levels=levels)
    cm = _load_crossed_module(cm_file)
    b = bar_of_hom(cm.boundary, settings.levels)
    gamma = gamma_from_cm(cm, settings.levels, bar_complex=b)
    report = Report("gamma")
    report.extend(verify_simplicial_group(
        gamma, settings.pair_limit, settings.triple_limit, settings.sample_size, settings.seed,
    ), "group:")
    report.extend(equivariant_iso_check(gamma, b), "equivariant:")
    _emit(gamma_to_model(gamma, report), fmt, out)
    if fmt == "text":
        display_table(
            console,
            [[m, group.order] for m, group in enumerate(gamma.level_groups)],
            ["Level", "Order"],
            title="Gamma",
        )
        display_report(console, report)
    if not report.ok:
        sys.exit(1)


@cli.command("homotopy")
@click.argument("source", type=click.Path(dir_okay=False))
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def homotopy_command(source, levels, fmt, out):
    """
    Moore homotopy groups of Gamma for a crossed-module (or gamma) file.

    Example:
        homnorm homotopy certificate.json --levels 4
    """
    k = _settings(levels=levels).levels
    cm = _load_crossed_module(source)
    gamma = gamma_from_cm(cm, k)
    rows = []
    for m in range(k - 1):
        pi = moore_homotopy(gamma, m)
        rows.append({"m": m, "order": pi.order, "abelian": pi.is_abelian, "identified_as": identify(pi)})
    payload: Dict[str, Any] = {"levels": k, "pi": rows}
    if k >= 3:
        invariants = two_type_invariants(cm, k, gamma=gamma)
        payload["two_type"] = {
            "pi1": {"order": invariants.pi1.order, "identified_as": identify(invariants.pi1)},
            "pi2": {"order": invariants.pi2.order, "identified_as": identify(invariants.pi2)},
        }
    if out:
        output_json(payload, out)
    if fmt == "json":
        output_json(payload)
    else:
        display_table(
            console,
            [[f"pi_{r['m']}", r["order"], r["identified_as"] or "?", "yes" if r["abelian"] else "no"] for r in rows],
            ["Group", "Order", "Type", "Abelian"],
            title="Moore homotopy",
        )


@cli.command("from-bar")
@click.argument("gset_file", type=click.Path(dir_okay=False))
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def from_bar_command(gset_file, levels, fmt, out):
    """
    The homotopy action Bar(X, G) -> BG of a right G-set file.

    Example:
        homnorm from-bar swap.json --levels 3 --out action.json
    """
    k = _settings(levels=levels).levels
    x = load(gset_file, RightGSetModel)
    action = from_bar(x, x.group, k)
    _emit(action, fmt, out)
    if fmt == "text":
        display_table(
            console,
            [[m, a, b] for m, (a, b) in enumerate(zip(action.source.level_sizes, action.target.level_sizes))],
            ["Level", "|A|", "|B|"],
            title="from-bar",
        )


@cli.command("rigidify")
@click.argument("action_file", type=click.Path(dir_okay=False))
@output_options
@add_rich_help_option
@handle_errors
def rigidify_command(action_file, fmt, out):
    """
    Rigidify a homotopy-action file to a group and a strict right action.

    Example:
        homnorm rigidify action.json --out rigid.json
    """
    rigid = rigidify(load(action_file, HomotopyActionModel))
    _emit(rigid, fmt, out)
    if fmt == "text":
        group = rigid.group
        console.print(
            f"[success]group of order {group.order} {identify(group)} acting on "
            f"{rigid.carrier_size} point(s)[/success]"
        )
        table = [[str(v) for v in row] for row in rigid.action.act]
        display_table(
            console,
            [[x, *row] for x, row in enumerate(table)],
            ["x", *(group.label(g) for g in group.elements())],
            title="x.g",
        )


@cli.command("roundtrip")
@click.argument("gset_file", type=click.Path(dir_okay=False))
@levels_option
@output_options
@add_rich_help_option
@handle_errors
def roundtrip_command(gset_file, levels, fmt, out):
    """
    Check that rigidify and from-bar are inverse on a right G-set file.

    Example:
        homnorm roundtrip swap.json --levels 3
    """
    k = _settings(levels=levels).levels
    x = load(gset_file, RightGSetModel)
    report = roundtrip_check(x, x.group, k)
    if out:
        output_json(report.to_dict(), out)
    if fmt == "json":
        output_json(report.to_dict())
    else:
        display_report(console, report)
    if not report.ok:
        sys.exit(1)


@cli.command("catalog")
@click.option("--max-order", type=int, help="Largest group order visited (default 8)")
@levels_option
@click.option("--abelian-only", is_flag=True, help="Only abelian catalog groups")
@click.option("--workers", type=int, help="Worker processes (default 1)")
@click.option("--budget", type=float, help="Cap on |gens G| * log2 |Aut N| for the action search")
@output_options
@add_rich_help_option
@handle_errors
def catalog_command(max_order, levels, abelian_only, workers, budget, fmt, out):
    """
    Run every check on every homomorphism between catalog groups.

    Exits 1 when any check fails.

    Example:
        homnorm catalog --max-order 8 --levels 4 --workers 4 --out run.json
    """
    settings = _settings(max_order=max_order, levels=levels, workers=workers, budget=budget)
    params = RunParameters(
        max_order=settings.max_order,
        levels=settings.levels,
        abelian_only=abelian_only,
        budget=settings.budget,
        pair_limit=settings.pair_limit,
        triple_limit=settings.triple_limit,
        sample_size=settings.sample_size,
        seed=settings.seed,
    )
    if fmt == "text":
        with console.status("[info]Running the catalog...[/info]"):
            report = run_catalog(params, settings.workers)
    else:
        report = run_catalog(params, settings.workers)
    if out:
        output_json(report.to_dict(), out)
    if fmt == "json":
        output_json(report.to_dict())
    else:
        display_summary(console, "Catalog run", {
            **report.verdicts,
            "inputs digest": report.inputs_digest[:16],
            "seconds": report.timing.get("total_seconds"),
        }, "success" if report.ok else "error")
        line = summarize(report)
        if line:
            console.print(f"[info]{line}[/info]")
        display_failures(console, report.failures)
    if not report.ok:
        sys.exit(1)


@cli.command("groups")
@click.option("--max-order", type=int, default=24, help="Largest order listed")
@click.option("--abelian-only", is_flag=True, help="Only abelian groups")
@output_options
@add_rich_help_option
@handle_errors
def groups_command(max_order, abelian_only, fmt, out):
    """
    List the built-in catalog groups.

    Example:
        homnorm groups --max-order 8
    """
    entries = catalog_entries(max_order, abelian_only)
    payload = [{"name": e.name, "order": e.order, "abelian": e.group.is_abelian} for e in entries]
    if out:
        output_json(payload, out)
    if fmt == "json":
        output_json(payload)
    else:
        display_table(console, group_rows(e.group for e in entries), ["Name", "Order", "Abelian"], title="Catalog")


if __name__ == "__main__":
    cli()
