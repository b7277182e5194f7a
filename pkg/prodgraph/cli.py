#!/usr/bin/env python3
"""
prodgraph - main CLI

Exit codes: 0 success, 1 a check failed (claim, isomorphism, validation),
2 usage, parse or hypothesis errors.
"""

import json
import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional

import rich_click as click
from colorama import Fore, Style
from rich.console import Console
from rich.logging import RichHandler

from .__version__ import get_version_info
from .characterize import (
    ConnectivityObstruction,
    DegreeObstruction,
    EigenvalueObstruction,
    ExplicitMap,
    IsoCertificate,
    OrderObstruction,
    PairKind,
    compare_graphs,
    cross_validate,
    decide,
)
from .config import (
    Config,
    ConfigManager,
    create_default_config,
    find_config_file,
    get_prodgraph_dir,
)
from .errors import ConfigError, GraphFormatError, ProdgraphError
from .graph import Graph
from .graph_io import EDGELIST, FORMATS, format_graph, format_mapping, read_graph, write_graph
from .iso import distance_regularity_check
from .products import ProductKind, product
from .reproduce import run_reproduce, write_report
from .spectra import adjacency_spectrum, distance_spectrum
from .validation_display import ReportDisplay, ValidationDisplay

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

GRAPH_FILE = click.Path(exists=True, dir_okay=False)


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("prodgraph")
    logger.handlers.clear()
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False


def _fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    click.echo(f"{Fore.RED}Error: {message}{Style.RESET_ALL}")
    sys.exit(code)


def _load_graph(path: str) -> Graph:
    try:
        return read_graph(path)
    except GraphFormatError as e:
        _fail(f"{path}: {e}")
    except (OSError, UnicodeDecodeError) as e:
        _fail(f"cannot read {path}: {e}")


def _load_config(ctx) -> Config:
    try:
        return ConfigManager(ctx.obj.get("config_path")).checked_config()
    except (ConfigError, FileNotFoundError) as e:
        _fail(str(e))


def _echo_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


@click.group(invoke_without_command=True)
@click.option(
    "--config",
    "-c",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Configuration file (default: $PRODGRAPH_DIR/config.yml if present)",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging to stderr")
@click.option("--version", is_flag=True, help="Show version information")
@click.option(
    "--schema",
    "show_schema",
    is_flag=True,
    help="Output command schema as JSON for scripts and agents",
)
@click.pass_context
def cli(ctx, config_path, verbose, version, show_schema):
    """Graph products, spectra and product isomorphism certificates.

    \b
    Graph files are edge lists ('n m' header, then 'u v' lines, 0-based)
    or graph6 strings; the format is detected automatically.
    """
    ctx.ensure_object(dict)
    _configure_logging(verbose)

    if version:
        info = get_version_info()
        click.echo(f"{Fore.CYAN}prodgraph {Fore.GREEN}{info['version']}{Style.RESET_ALL}")
        click.echo(f"Python {info['python']}, numpy {info['numpy']}")
        ctx.exit(EXIT_OK)

    if show_schema:
        from .schema import get_full_schema

        _echo_json(get_full_schema())
        ctx.exit(EXIT_OK)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(EXIT_OK)

    ctx.obj["config_path"] = config_path or find_config_file()


# --- Graph Commands ---


@cli.command("product")
@click.option(
    "--kind",
    type=click.Choice([kind.cli_name for kind in ProductKind]),
    required=True,
    help="Product to build",
)
@click.option("--g", "g_path", type=GRAPH_FILE, required=True, help="Left factor G")
@click.option("--h", "h_path", type=GRAPH_FILE, required=True, help="Right factor H")
@click.option("--out", type=click.Path(dir_okay=False), help="Output file (default: stdout)")
@click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default=EDGELIST, help="Output format"
)
@click.option("--json", "as_json", is_flag=True, help="Output a JSON summary")
def product_cmd(kind, g_path, h_path, out, fmt, as_json):
    """Build G (kind) H. Vertex (i, j) is labeled i*|V(H)| + j."""
    g, h = _load_graph(g_path), _load_graph(h_path)
    pg = product(ProductKind.from_name(kind), g, h)
    if out:
        write_graph(pg.graph, out, fmt)

    if as_json:
        data = {
            "kind": pg.kind.value,
            "name": pg.graph.name,
            "order": pg.order,
            "edges": pg.graph.edge_count,
            "factor_orders": list(pg.factor_orders),
            "degrees": sorted({int(d) for d in pg.graph.degrees}),
        }
        if out:
            data["out"] = out
        else:
            data["graph"] = format_graph(pg.graph, fmt)
        _echo_json(data)
    elif out:
        click.echo(
            f"{Fore.GREEN}✓{Style.RESET_ALL} {pg.graph.name}: {pg.order} vertices, "
            f"{pg.graph.edge_count} edges written to {out}"
        )
    else:
        click.echo(format_graph(pg.graph, fmt), nl=False)


@cli.command("spectrum")
@click.option(
    "--matrix",
    type=click.Choice(["adjacency", "distance"]),
    default="adjacency",
    help="Matrix whose eigenvalues are computed",
)
@click.option("--g", "g_path", type=GRAPH_FILE, required=True, help="Graph file")
@click.option("--tol", type=float, default=None, help="Clustering tolerance (default: config)")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def spectrum_cmd(ctx, matrix, g_path, tol, as_json):
    """Eigenvalues of the adjacency or distance matrix, clustered."""
    g = _load_graph(g_path)
    tol = _load_config(ctx).spectral.tol if tol is None else tol
    if tol <= 0:
        _fail(f"--tol must be positive, got {tol}")
    try:
        compute = adjacency_spectrum if matrix == "adjacency" else distance_spectrum
        spectrum = compute(g, tol)
    except ProdgraphError as e:
        _fail(str(e))

    if as_json:
        _echo_json(spectrum.to_dict())
        return

    label = "A" if matrix == "adjacency" else "D"
    click.echo(
        f"{Fore.CYAN}Spectrum of {label}({g.name or 'G'}){Style.RESET_ALL} "
        f"order {spectrum.order}, {spectrum.distinct_count} distinct, tol {spectrum.tol:g}"
    )
    for value, multiplicity in spectrum.clusters:
        click.echo(f"  {value:>14.9f}  x{multiplicity}")


def _describe(certificate: IsoCertificate) -> str:
    if isinstance(certificate, ExplicitMap):
        return f"explicit map ({certificate.source})"
    if isinstance(certificate, DegreeObstruction):
        return f"{certificate.which} degree {certificate.value_a} vs {certificate.value_b}"
    if isinstance(certificate, ConnectivityObstruction):
        return f"components {certificate.components_a} vs {certificate.components_b}"
    if isinstance(certificate, EigenvalueObstruction):
        return (
            f"smallest adjacency eigenvalue {certificate.smallest_a:.9f} "
            f"vs {certificate.smallest_b:.9f}"
        )
    if isinstance(certificate, OrderObstruction):
        return f"orders {certificate.order_a} vs {certificate.order_b}"
    return f"search {certificate.status.value} after {certificate.nodes} nodes"


@cli.command("check-iso")
@click.option("--g1", "g1_path", type=GRAPH_FILE, required=True, help="First graph")
@click.option("--g2", "g2_path", type=GRAPH_FILE, required=True, help="Second graph")
@click.option(
    "--map-out", type=click.Path(dir_okay=False), help="Write the bijection as 'v phi(v)' lines"
)
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def check_iso_cmd(ctx, g1_path, g2_path, map_out, as_json):
    """Decide isomorphism of two graphs, with a certificate.

    Exits 0 when isomorphic, 1 when not (or when the search budget ran out).
    """
    g1, g2 = _load_graph(g1_path), _load_graph(g2_path)
    budget = _load_config(ctx).search.node_budget
    comparison = compare_graphs(g1, g2, budget)
    certificate = comparison.certificate

    if map_out and isinstance(certificate, ExplicitMap):
        Path(map_out).write_text(format_mapping(certificate.bijection.forward), encoding="utf-8")

    if as_json:
        data = comparison.to_dict()
        if map_out and isinstance(certificate, ExplicitMap):
            data["map_out"] = map_out
        _echo_json(data)
    elif comparison.isomorphic:
        click.echo(f"{Fore.GREEN}✓ isomorphic{Style.RESET_ALL} ({_describe(certificate)})")
        if map_out:
            click.echo(f"  map written to {map_out}")
    elif comparison.isomorphic is None:
        click.echo(f"{Fore.YELLOW}! undecided{Style.RESET_ALL} ({_describe(certificate)})")
    else:
        click.echo(f"{Fore.RED}✗ not isomorphic{Style.RESET_ALL} ({_describe(certificate)})")

    sys.exit(EXIT_OK if comparison.isomorphic else EXIT_FAILED)


@cli.command("drg-check")
@click.option("--g", "g_path", type=GRAPH_FILE, required=True, help="Connected graph")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
def drg_check_cmd(g_path, as_json):
    """Distance-regularity: intersection array, or a witness triple."""
    g = _load_graph(g_path)
    try:
        result = distance_regularity_check(g)
    except ProdgraphError as e:
        _fail(str(e))

    if as_json:
        _echo_json(result.to_dict())
        return

    if result.regular:
        b, c = result.intersection_array
        click.echo(
            f"{Fore.GREEN}✓ distance-regular{Style.RESET_ALL}, diameter {result.diameter}, "
            f"intersection array {{{', '.join(map(str, b))}; {', '.join(map(str, c))}}}"
        )
        return

    w = result.witness
    click.echo(f"{Fore.RED}✗ not distance-regular{Style.RESET_ALL}, diameter {result.diameter}")
    click.echo(f"  witness: x={w.x} y={w.y} z={w.z} (base of z: {w.base_of_z}), distance {w.i}")
    click.echo(f"  {w.family}_{w.i} values: {w.y_value} vs {w.z_value}")


@cli.command("characterize")
@click.option(
    "--pair",
    type=click.Choice([p.value for p in PairKind]),
    required=True,
    help="Pair of product kinds",
)
@click.option("--g", "g_path", type=GRAPH_FILE, required=True, help="Factor G")
@click.option("--h", "h_path", type=GRAPH_FILE, required=True, help="Factor H")
@click.option(
    "--cross-validate",
    "with_search",
    is_flag=True,
    help="Also search for an isomorphism between the two products",
)
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def characterize_cmd(ctx, pair, g_path, h_path, with_search, as_json):
    """Decide whether G (kind A) H and G (kind B) H are isomorphic."""
    g, h = _load_graph(g_path), _load_graph(h_path)
    kind_a, kind_b = PairKind.from_name(pair).kinds
    budget = _load_config(ctx).search.node_budget
    try:
        if with_search:
            validation = cross_validate(kind_a, kind_b, g, h, budget)
            decision = validation.decision
        else:
            validation = None
            decision = decide(kind_a, kind_b, g, h)
    except ProdgraphError as e:
        _fail(str(e))

    if as_json:
        data = decision.to_dict()
        if validation is not None:
            data["cross_validation"] = validation.to_dict()
        _echo_json(data)
        return

    left = f"G{kind_a.symbol}H"
    right = f"G{kind_b.symbol}H"
    if decision.isomorphic:
        click.echo(f"{Fore.GREEN}✓ {left} ≅ {right}{Style.RESET_ALL} [{decision.rule.value}]")
    else:
        click.echo(f"{Fore.RED}✗ {left} ≇ {right}{Style.RESET_ALL} [{decision.rule.value}]")
    click.echo(f"  certificate: {_describe(decision.certificate)}")
    if validation is not None:
        click.echo(
            f"  search: {validation.search.status.value} after {validation.search.nodes} nodes, "
            f"{validation.agreement.value}"
        )


@cli.command("reproduce")
@click.option(
    "--max-n", type=click.IntRange(min=3), default=None, help="Largest odd cycle (default: config)"
)
@click.option("--out", type=click.Path(dir_okay=False), help="Write the JSON report here")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--json", "as_json", is_flag=True, help="Print the JSON report")
@click.pass_context
def reproduce_cmd(ctx, max_n, out, jobs, as_json):
    """Regenerate every claim and report pass/fail.

    Exits 0 when every claim passes, 1 otherwise.
    """
    config = _load_config(ctx)
    report = run_reproduce(
        max_n=config.reproduce.max_n if max_n is None else max_n,
        jobs=config.reproduce.jobs if jobs is None else jobs,
        exhaustive_order=config.corpus.exhaustive_order,
        max_order=config.corpus.max_order,
        node_budget=config.search.node_budget,
    )

    if out:
        try:
            write_report(report, out)
        except OSError as e:
            _fail(f"cannot write {out}: {e}", EXIT_FAILED)

    if as_json:
        _echo_json(report.to_dict())
    else:
        ReportDisplay.display_report(report)
        if out:
            click.echo(f"Report written to {out}")

    sys.exit(EXIT_OK if report.all_passed else EXIT_FAILED)


# --- Config Management Commands ---


@cli.group("config")
def config_cmd():
    """Configuration management commands."""


@config_cmd.command("show")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def config_show(ctx, as_json):
    """Effective settings and their source."""
    try:
        manager = ConfigManager(ctx.obj.get("config_path"))
        result = manager.list_settings()
    except (ConfigError, FileNotFoundError) as e:
        _fail(str(e))

    if as_json:
        _echo_json(result)
        return

    click.echo(f"{Fore.CYAN}Settings{Style.RESET_ALL} from {result['source']}\n")
    for key, setting in result["settings"].items():
        status = f" {Fore.BLUE}(default){Style.RESET_ALL}" if setting["is_default"] else ""
        click.echo(f"  {Fore.WHITE}{key}{Style.RESET_ALL} = {setting['value']}{status}")
        click.echo(f"    {setting['description']}")


@config_cmd.command("validate")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
@click.pass_context
def config_validate(ctx, as_json):
    """Validate the configuration file."""
    manager = ConfigManager(ctx.obj.get("config_path"))
    if not as_json:
        click.echo(f"{Fore.CYAN}Validating configuration ({manager.source})...{Style.RESET_ALL}")
    try:
        manager.load_config()
    except (ConfigError, FileNotFoundError) as e:
        if as_json:
            _echo_json(
                {
                    "source": manager.source,
                    "valid": False,
                    "errors": [str(e)],
                    "warnings": [],
                    "info": [],
                }
            )
        else:
            click.echo(f"  {Fore.RED}✗{Style.RESET_ALL} {e}")
        sys.exit(EXIT_FAILED)

    if as_json:
        warnings, info, errors = ValidationDisplay.categorize_results(manager.validate_config())
        _echo_json(
            {
                "source": manager.source,
                "valid": not errors,
                "errors": errors,
                "warnings": warnings,
                "info": info,
            }
        )
        if errors:
            sys.exit(EXIT_FAILED)
        return

    if not ValidationDisplay.display_detailed_validation(manager):
        sys.exit(EXIT_FAILED)


@config_cmd.command("init")
@click.option("--output", "-o", default=None, help="Output path (default: $PRODGRAPH_DIR/config.yml)")
@click.option("--force", is_flag=True, help="Overwrite an existing file")
@click.option("--json", "as_json", is_flag=True, help="Output as JSON")
def config_init(output: Optional[str], force: bool, as_json: bool):
    """Write the configuration template."""
    target = output or str(get_prodgraph_dir() / "config.yml")
    try:
        written = create_default_config(target, force=force)
    except FileExistsError as e:
        if as_json:
            _echo_json({"created": False, "path": target, "error": str(e)})
            sys.exit(EXIT_FAILED)
        _fail(str(e), EXIT_FAILED)
    if as_json:
        _echo_json({"created": True, "path": written})
        return
    click.echo(f"{Fore.GREEN}✓ Created {written}{Style.RESET_ALL}")


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
