#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import sys
import typer
from typing import Sequence

from scripts import (
    bench,
    gen,
    nash,
    oracle_check,
    solve_winlose,
    solve_zerosum
)

# =============================================================================
#                                     APP
# =============================================================================

app = typer.Typer(no_args_is_help = True)

app.command('solve-winlose')(solve_winlose.run)
app.command('solve-zerosum')(solve_zerosum.run)
app.command('nash')(nash.run)
app.command('oracle')(oracle_check.run)
app.add_typer(gen.app, name = 'gen')
app.command('bench')(bench.run)

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def _is_usage_error(
    e: Exception
) -> bool:

    # click exceptions come from click itself or from the copy bundled with
    # newer typer releases; both carry exit_code and show()
    return callable(getattr(e, 'show', None)) and hasattr(e, 'exit_code')

def run_cli(
    argv: Sequence[str]
) -> int:
    """
    Runs one `dgms` subcommand and returns its exit code: 0 on success, 1 on
    input or usage errors (unknown subcommand or flag, unreadable file,
    invalid game), 2 on internal contract violations.

    Args:
        argv (Sequence[str]): Command-line arguments after the program name.

    Returns:
        int: Exit code.
    """

    command = typer.main.get_command(app)
    try:
        result = command.main(
            list(argv), prog_name = 'dgms', standalone_mode = False
        )
    except typer.Abort:
        typer.echo('aborted', err = True)
        return 1
    except Exception as e:
        if not _is_usage_error(e):
            raise
        e.show()
        return 1
    return result if isinstance(result, int) else 0

def main():

    sys.exit(run_cli(sys.argv[1:]))

# =============================================================================
#                                 ENTRY POINT
# =============================================================================

if __name__ == "__main__":
    main()

# =============================================================================
#                                     EOF
# =============================================================================
