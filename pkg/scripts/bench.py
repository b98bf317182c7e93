#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from pathlib import Path
from typing import List, Optional

from dgms_tools.analysis import run_scaling_benchmark
from dgms_tools.constants import BENCH_SIZES
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
    sizes: list[int],
    output_csv: Path | None = None,
    output_float_format: str = '%.4f'
):

    results = run_scaling_benchmark(sorted(sizes))
    typer.echo(
        results.to_string(
            index = False,
            float_format = lambda x: output_float_format % x
        )
    )
    if output_csv is not None:
        typer.echo(f'writing {output_csv}', err = True)
        results.to_csv(
            output_csv,
            index = False,
            float_format = output_float_format
        )

@app.command()
def run(
    sizes: List[int] = typer.Option(
        list(BENCH_SIZES),
        '--size',
        min = 4,
        help = 'benchmark chain size in vertices (repeatable)'
    ),
    output_csv: Optional[Path] = typer.Option(
        None,
        file_okay = True,
        dir_okay = False,
        writable = True,
        resolve_path = True,
        help = 'output .csv file to write'
    ),
    output_float_format: str = typer.Option(
        '%.4f',
        help = 'output float format'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log progress to stderr'
    )
):

    configure_logging(verbose)
    with exit_on_error():
        main(
            sizes = sizes,
            output_csv = output_csv,
            output_float_format = output_float_format
        )

# =============================================================================
#                                 ENTRY POINT
# =============================================================================

if __name__ == "__main__":
    app()

# =============================================================================
#                                     EOF
# =============================================================================
