#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from typing import Optional, TextIO

from dgms_tools.io import (
    parse_game,
    parse_utilities,
    render_zerosum
)
from dgms_tools.zerosum import solve_zerosum
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
    from_vertex: str | None = None
):

    structure = parse_game(game.read())
    utility = parse_utilities(utils.read(), structure)
    if from_vertex is not None and from_vertex not in structure.digraph:
        raise ValueError(
            f'\'{from_vertex}\' is not a vertex'
        )
    solution = solve_zerosum(structure, utility)
    typer.echo(render_zerosum(structure, solution, from_vertex), nl = False)

@app.command()
def run(
    game: typer.FileText = typer.Option(
        '-',
        help = 'game file to solve (\'-\' reads stdin)'
    ),
    utils: typer.FileText = typer.Option(
        ...,
        help = 'zero-sum utility file'
    ),
    from_vertex: Optional[str] = typer.Option(
        None,
        '--from',
        help = 'initial position whose play outcome is reported'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log solver progress to stderr'
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
