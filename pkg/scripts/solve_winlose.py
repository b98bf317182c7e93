#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from typing import Optional, TextIO

from dgms_tools.game import WinLosePartition
from dgms_tools.io import (
    parse_game,
    render_winlose
)
from dgms_tools.winlose import solve_winlose
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
    win: str,
    from_vertex: str | None = None
):

    structure = parse_game(game.read())
    partition = WinLosePartition.from_winning_set(
        structure, (a.strip() for a in win.split(',') if a.strip())
    )
    if from_vertex is not None and from_vertex not in structure.digraph:
        raise ValueError(
            f'\'{from_vertex}\' is not a vertex'
        )
    solution = solve_winlose(structure, partition)
    typer.echo(render_winlose(structure, solution, from_vertex), nl = False)

@app.command()
def run(
    game: typer.FileText = typer.Option(
        '-',
        help = 'game file to solve (\'-\' reads stdin)'
    ),
    win: str = typer.Option(
        ...,
        help = 'comma-separated outcome ids winning for player 1'
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
            win = win,
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
