#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from typing import Optional, TextIO

from dgms_tools.constants import DEFAULT_SEED
from dgms_tools.game import PositionalStructure
from dgms_tools.generate import (
    RandomGameConfig,
    gen_household,
    gen_random_from_config
)
from dgms_tools.io import render_game
from scripts.common import (
    configure_logging,
    exit_on_error
)

# =============================================================================
#                                     APP
# =============================================================================

app = typer.Typer(no_args_is_help = True)

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def _write(
    structure: PositionalStructure,
    out: TextIO
):

    out.write(render_game(structure))

def main_household(
    n: int,
    out: TextIO
):

    _write(gen_household(n), out)

def main_random(
    preset: str | None,
    vertices: int,
    players: int,
    density: float,
    terminal_fraction: float,
    seed: int,
    out: TextIO
):

    config = preset or RandomGameConfig(
        num_vertices = vertices,
        num_players = players,
        edge_density = density,
        terminal_fraction = terminal_fraction
    )
    _write(gen_random_from_config(config, seed), out)

@app.command('household')
def run_household(
    n: int = typer.Option(
        ...,
        help = 'number of players (and of cycle positions)'
    ),
    out: typer.FileTextWrite = typer.Option(
        '-',
        help = 'game file to write (\'-\' writes stdout)'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log progress to stderr'
    )
):

    configure_logging(verbose)
    with exit_on_error():
        main_household(n = n, out = out)

@app.command('random')
def run_random(
    preset: Optional[str] = typer.Option(
        None,
        help = 'named parameter preset (overrides the explicit parameters)'
    ),
    vertices: int = typer.Option(
        8,
        help = 'number of vertices'
    ),
    players: int = typer.Option(
        2,
        help = 'number of players'
    ),
    density: float = typer.Option(
        0.25,
        help = 'edge probability per ordered vertex pair'
    ),
    terminal_fraction: float = typer.Option(
        0.25,
        help = 'fraction of terminal vertices'
    ),
    seed: int = typer.Option(
        DEFAULT_SEED,
        help = 'random seed'
    ),
    out: typer.FileTextWrite = typer.Option(
        '-',
        help = 'game file to write (\'-\' writes stdout)'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log progress to stderr'
    )
):

    configure_logging(verbose)
    with exit_on_error():
        main_random(
            preset = preset,
            vertices = vertices,
            players = players,
            density = density,
            terminal_fraction = terminal_fraction,
            seed = seed,
            out = out
        )

# =============================================================================
#                                 ENTRY POINT
# =============================================================================

if __name__ == "__main__":
    app()

# =============================================================================
#                                     EOF
# =============================================================================
