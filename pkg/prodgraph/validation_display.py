"""
Helpers for symbol-prefixed status output.

Config validation and the reproduce report share one set of symbols so
every check-style command reads the same way.
"""

from typing import List, Tuple

import click
from colorama import Fore, Style

from .config import ConfigManager
from .reproduce import Report


class ValidationDisplay:
    """Renders ConfigManager.validate_config() messages."""

    # check commands share these symbol prefixes (✗, !, ✓)
    ERROR_PREFIX = "✗"
    WARNING_PREFIX = "!"
    INFO_PREFIX = "i"

    @classmethod
    def categorize_results(
        cls, results: List[str]
    ) -> Tuple[List[str], List[str], List[str]]:
        """Split messages into (warnings, info, errors), prefixes stripped."""
        warnings = [r[1:] for r in results if r.startswith(cls.WARNING_PREFIX)]
        info = [r[1:] for r in results if r.startswith(cls.INFO_PREFIX)]
        errors = [r[1:] for r in results if r.startswith(cls.ERROR_PREFIX)]
        return warnings, info, errors

    @classmethod
    def display_detailed_validation(cls, config_manager: ConfigManager) -> bool:
        """Print every message; True when there are no errors."""
        warnings, info, errors = cls.categorize_results(config_manager.validate_config())

        if warnings:
            click.echo(f"\n{Fore.YELLOW}Warnings:{Style.RESET_ALL}")
            for msg in warnings:
                click.echo(f"  {Fore.YELLOW}!{Style.RESET_ALL} {msg}")

        if info:
            click.echo(f"\n{Fore.CYAN}Info:{Style.RESET_ALL}")
            for msg in info:
                click.echo(f"  {Fore.CYAN}i{Style.RESET_ALL} {msg}")

        if errors:
            click.echo(f"\n{Fore.RED}Errors:{Style.RESET_ALL}")
            for error in errors:
                click.echo(f"  {Fore.RED}✗{Style.RESET_ALL} {error}")
            return False

        click.echo(f"\n{Fore.GREEN}✓ Configuration is valid{Style.RESET_ALL}")
        return True


class ReportDisplay:
    """Renders a reproduce Report, one claim per line."""

    @staticmethod
    def display_report(report: Report) -> None:
        for record, line in zip(report.claims, report.render_text()):
            if record.passed:
                click.echo(f"{Fore.GREEN}✓{Style.RESET_ALL} {line}")
            else:
                click.echo(f"{Fore.RED}✗{Style.RESET_ALL} {line}")

        failed = len(report.failed)
        total = len(report.claims)
        if failed:
            click.echo(
                f"\n{Fore.RED}{failed} of {total} claims failed{Style.RESET_ALL}"
            )
        else:
            click.echo(f"\n{Fore.GREEN}✓ All {total} claims pass{Style.RESET_ALL}")
