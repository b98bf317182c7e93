#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

import typer
from enum import Enum
from typing import Optional, TextIO

from dgms_tools.constants import (
    DEFAULT_MAX_PROFILES,
    DEFAULT_SEED,
    DEFAULT_UTILITY_SAMPLES
)
from dgms_tools.game import expand_game_form
from dgms_tools.io import (
    RESULT_FOOTER,
    RESULT_HEADER,
    parse_game,
    parse_profile,
    parse_utilities
)
from dgms_tools.oracle import (
    brute_force_value,
    check_solvability,
    is_nash,
    is_subgame_perfect
)
from scripts.common import (
    configure_logging,
    exit_on_error
)

# =============================================================================
#                                   CLASSES
# =============================================================================

class Check(str, Enum):

    ne = 'ne'
    spne = 'spne'
    value = 'value'
    solvability = 'solvability'

# =============================================================================
#                                     APP
# =============================================================================

app = typer.Typer()

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def main(
    game: TextIO,
    check: Check,
    utils: TextIO | None = None,
    profile: TextIO | None = None,
    from_vertex: str | None = None,
    max_profiles: int = DEFAULT_MAX_PROFILES,
    samples: int = DEFAULT_UTILITY_SAMPLES,
    seed: int = DEFAULT_SEED
):

    structure = parse_game(game.read())

    needs = {
        Check.ne: ('utils', 'profile', 'from'),
        Check.spne: ('utils', 'profile'),
        Check.value: ('utils', 'from'),
        Check.solvability: ('from',)
    }[check]
    supplied = {'utils': utils, 'profile': profile, 'from': from_vertex}
    for name in needs:
        if supplied[name] is None:
            raise ValueError(
                f'--check {check.value} requires --{name}'
            )

    utility = parse_utilities(utils.read(), structure) if utils else None
    strategy_profile = (
        parse_profile(profile.read(), structure) if profile else None
    )

    if check is Check.ne:
        found = is_nash(
            structure, from_vertex, utility, strategy_profile, max_profiles
        )
        lines = [f'nash({from_vertex})={str(found).lower()}']
    elif check is Check.spne:
        found = is_subgame_perfect(
            structure, utility, strategy_profile, max_profiles
        )
        lines = [f'subgame_perfect={str(found).lower()}']
    elif check is Check.value:
        value = brute_force_value(structure, from_vertex, utility, max_profiles)
        lines = [f'value({from_vertex})={value}']
    else:
        table = expand_game_form(structure, from_vertex)
        report = check_solvability(table, samples = samples, seed = seed)
        lines = [
            f'winlose_solvable={str(report.winlose_solvable).lower()}',
            f'zerosum_solvable_sampled='
            f'{str(report.zerosum_solvable_sampled).lower()}',
            f'nash_solvable_sampled='
            f'{str(report.nash_solvable_sampled).lower()}',
            f'samples={report.samples}'
        ]
        if report.saddle_free_partition is not None:
            lines.append(
                f'saddle_free_partition='
                f'{{{",".join(sorted(report.saddle_free_partition))}}}'
            )

    typer.echo('\n'.join([RESULT_HEADER, *lines, RESULT_FOOTER]))

@app.command()
def run(
    game: typer.FileText = typer.Option(
        '-',
        help = 'game file to check (\'-\' reads stdin)'
    ),
    check: Check = typer.Option(
        ...,
        help = 'brute-force check to run'
    ),
    utils: Optional[typer.FileText] = typer.Option(
        None,
        help = 'utility file'
    ),
    profile: Optional[typer.FileText] = typer.Option(
        None,
        help = 'strategy profile file of \'vertex -> target\' lines'
    ),
    from_vertex: Optional[str] = typer.Option(
        None,
        '--from',
        help = 'initial position'
    ),
    max_profiles: int = typer.Option(
        DEFAULT_MAX_PROFILES,
        min = 1,
        help = 'strategy profile enumeration cap'
    ),
    samples: int = typer.Option(
        DEFAULT_UTILITY_SAMPLES,
        min = 1,
        help = 'random utilities sampled by the solvability check'
    ),
    seed: int = typer.Option(
        DEFAULT_SEED,
        help = 'utility sampling seed'
    ),
    verbose: bool = typer.Option(
        False,
        help = 'log progress to stderr'
    )
):

    configure_logging(verbose)
    with exit_on_error():
        main(
            game = game,
            check = check,
            utils = utils,
            profile = profile,
            from_vertex = from_vertex,
            max_profiles = max_profiles,
            samples = samples,
            seed = seed
        )

# =============================================================================
#                                 ENTRY POINT
# =============================================================================

if __name__ == "__main__":
    app()

# =============================================================================
#                                     EOF
# =============================================================================
