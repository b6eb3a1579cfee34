"""
'jch presets' command - List the shipped presets.
"""

import click
from rich import box
from rich.console import Console
from rich.table import Table

from jchsim.services.presets import list_presets

console = Console()


@click.command()
def presets_command():
    """List presets usable with --preset."""
    table = Table(title="Presets", box=box.ROUNDED)
    table.add_column("Name", style="cyan")
    table.add_column("Experiment", style="magenta")
    table.add_column("Aliases", style="green")
    table.add_column("Description")
    for name, entry in list_presets().items():
        table.add_row(name, entry["experiment"], ", ".join(entry["aliases"]), entry["description"])
    console.print(table)
