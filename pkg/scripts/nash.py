#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from typing import TextIO

from dgms_tools.io import (
    parse_game,
    parse_utilities,
    render_nash
)
from dgms_tools.nash import build_nash
from scripts.common import (
    configure_logging,
    exit_on_error
)

# =============================================================================
#                                     APP
# =============================================================================

app = typer.Typer()

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def main(
    game: TextIO,
    utils: TextIO,
    from_vertex: str
):

    structure = parse_game(game.read())
    utility = parse_utilities(utils.read(), structure)
    certificate = build_nash(structure, utility, from_vertex)
    typer.echo(render_nash(structure, certificate, from_vertex), nl = False)

@app.command()
def run(
    game: typer.FileText = typer.Option(
        '-',
        help = 'two-person game file (\'-\' reads stdin)'
    ),
    utils: typer.FileText = typer.Option(
        ...,
        help = 'utility file (any two-person utilities)'
    ),
    from_vertex: str = typer.Option(
        ...,
        '--from',
        help = 'initial position at which the equilibrium is built'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log the partition search to stderr'
    )
):

    configure_logging(verbose)
    with exit_on_error():
        main(
            game = game,
            utils = utils,
            from_vertex = from_vertex
        )

# =============================================================================
#                                 ENTRY POINT
# =============================================================================

if __name__ == "__main__":
    app()

# =============================================================================
#                                     EOF
# =============================================================================
