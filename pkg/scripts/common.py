#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import logging
import typer
from contextlib import contextmanager
from typing import Iterator

from dgms_tools.errors import ContractViolationError

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def configure_logging(
    verbose: bool = False
) -> None:

    logging.basicConfig(
        level = logging.DEBUG if verbose else logging.WARNING,
        format = '%(levelname)s %(name)s: %(message)s'
    )

@contextmanager
def exit_on_error() -> Iterator[None]:
    """
    Maps library errors onto command-line exit codes: input errors
    (`ValueError`, file errors) exit with code 1 and internal contract
    violations with code 2; the message is written to stderr.
    """

    try:
        yield
    except ContractViolationError as e:
        typer.echo(f'internal error: {e}', err = True)
        raise typer.Exit(code = 2) from None
    except (ValueError, OSError) as e:
        typer.echo(f'error: {e}', err = True)
        raise typer.Exit(code = 1) from None

# =============================================================================
#                                     EOF
# =============================================================================
