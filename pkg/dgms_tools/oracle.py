#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import itertools
import logging
import math
import numpy as np
import pandas as pd
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .constants import (
    DEFAULT_MAX_PROFILES,
    DEFAULT_SEED,
    DEFAULT_UTILITY_SAMPLES,
    MAX_EXHAUSTIVE_ORDERINGS,
    MAX_SOLVABILITY_OUTCOMES
)
from .digraph import Vertex
from .errors import ContractViolationError
from .game import (
    NormalFormTable,
    PositionalStructure,
    Strategy,
    StrategyProfile,
    UtilityFunction,
    WinLosePartition,
    iter_strategies,
    play_outcomes,
    profile_count,
    require_two_players,
    trace_play,
    validate_profile
)

logger = logging.getLogger(__name__)

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class SolvabilityReport:
    """
    Solvability of a two-person game form: the exact win/lose bit (every
    partition of the outcomes has a saddle point), and the zero-sum and Nash
    bits over a sample of utilities. `saddle_free_partition` holds player 1's
    winning outcomes for the first partition found without a saddle point.
    """

    winlose_solvable: bool
    zerosum_solvable_sampled: bool
    nash_solvable_sampled: bool
    saddle_free_partition: frozenset[str] | None
    samples: int

    @property
    def agrees(
        self
    ) -> bool:

        return (
            self.winlose_solvable
            == self.zerosum_solvable_sampled
            == self.nash_solvable_sampled
        )

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def _check_cap(
    structure: PositionalStructure,
    max_profiles: int
) -> None:

    n_profiles = profile_count(structure)
    if n_profiles > max_profiles:
        raise ValueError(
            f'the game has {n_profiles} strategy profiles; the enumeration '
            f'cap is {max_profiles}'
        )

def iter_profiles(
    structure: PositionalStructure,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> Iterator[StrategyProfile]:
    """
    Yields every pure positional strategy profile as a mixed-radix counter
    over the non-terminal vertices in vertex order (the last vertex varies
    fastest; moves in edge insertion order).

    Raises:
        ValueError: If the number of profiles exceeds the cap.
    """

    _check_cap(structure, max_profiles)
    vertices = [v for v in structure.digraph.vertices if v in structure.owner]
    choices = [
        [edge.id for edge in structure.digraph.out_edges[v]]
        for v in vertices
    ]
    for moves in itertools.product(*choices):
        yield StrategyProfile(moves = dict(zip(vertices, moves)))

def is_nash(
    structure: PositionalStructure,
    start: Vertex,
    utility: UtilityFunction,
    profile: StrategyProfile,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> bool:
    """
    Returns True if no player can strictly improve their payoff at the play
    from the start vertex by a unilateral change of strategy.

    Args:
        structure (PositionalStructure): Positional structure (any number
            of players).
        start (Vertex): Initial position v0.
        utility (UtilityFunction): Utility function.
        profile (StrategyProfile): Total strategy profile.
        max_profiles (int, optional): Enumeration cap. Defaults to 10⁵.

    Returns:
        bool: True if the profile is a Nash equilibrium from `start`.

    Raises:
        ValueError: If the profile is not total;
        ValueError: If the number of profiles exceeds the cap.
    """

    _check_cap(structure, max_profiles)
    validate_profile(structure, profile)
    utility.validate(structure)

    base = trace_play(structure, profile, start).outcome.id
    for player in range(1, structure.players + 1):
        for strategy in iter_strategies(structure, player):
            deviation = trace_play(structure, profile.replace(strategy), start)
            if utility(player, deviation.outcome.id) > utility(player, base):
                return False
    return True

def is_subgame_perfect(
    structure: PositionalStructure,
    utility: UtilityFunction,
    profile: StrategyProfile,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> bool:
    """
    Returns True if the profile is a Nash equilibrium from every initial
    position simultaneously.

    Raises:
        ValueError: If the profile is not total;
        ValueError: If the number of profiles exceeds the cap.
    """

    _check_cap(structure, max_profiles)
    validate_profile(structure, profile)
    utility.validate(structure)

    base = play_outcomes(structure, profile)
    for player in range(1, structure.players + 1):
        for strategy in iter_strategies(structure, player):
            deviation = play_outcomes(structure, profile.replace(strategy))
            for v, outcome_id in deviation.items():
                if utility(player, outcome_id) > utility(player, base[v]):
                    return False
    return True

def find_nash(
    structure: PositionalStructure,
    start: Vertex,
    utility: UtilityFunction,
    subgame_perfect: bool = False,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> StrategyProfile | None:
    """
    Returns the first profile (in enumeration order) that is a Nash
    equilibrium from the start vertex, or a subgame-perfect one if
    `subgame_perfect` is True; returns None if there is none.

    Args:
        structure (PositionalStructure): Positional structure (any number
            of players).
        start (Vertex): Initial position v0; ignored for subgame-perfect
            searches.
        utility (UtilityFunction): Utility function.
        subgame_perfect (bool, optional): Search for a subgame-perfect
            equilibrium. Defaults to False.
        max_profiles (int, optional): Enumeration cap. Defaults to 10⁵.

    Returns:
        StrategyProfile | None: Equilibrium profile, if any.
    """

    for profile in iter_profiles(structure, max_profiles):
        if subgame_perfect:
            found = is_subgame_perfect(
                structure, utility, profile, max_profiles
            )
        else:
            found = is_nash(structure, start, utility, profile, max_profiles)
        if found:
            return profile
    return None

def _outcome_tensor(
    structure: PositionalStructure,
    max_profiles: int
) -> tuple[list[Vertex], list[list[dict[Vertex, str]]]]:

    require_two_players(structure)
    _check_cap(structure, max_profiles)
    x1s = list(iter_strategies(structure, 1))
    x2s = list(iter_strategies(structure, 2))
    return list(structure.digraph.vertices), [
        [
            play_outcomes(structure, StrategyProfile.combine(x1, x2))
            for x2 in x2s
        ]
        for x1 in x1s
    ]

def brute_force_values(
    structure: PositionalStructure,
    utility: UtilityFunction,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> dict[Vertex, Fraction]:
    """
    Returns the max-min value of player 1 from every initial position of a
    two-person zero-sum game, checking that it equals the min-max value.

    Payoffs are replaced by their rank among the distinct u₁ values so the
    comparison runs on an integer (x₁, x₂, v) tensor.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        utility (UtilityFunction): Zero-sum utility function.
        max_profiles (int, optional): Enumeration cap. Defaults to 10⁵.

    Returns:
        dict[Vertex, Fraction]: Value per vertex.

    Raises:
        ValueError: If the structure is not two-person or the utility
            function is not zero-sum;
        ValueError: If the number of profiles exceeds the cap;
        ContractViolationError: If max-min and min-max differ somewhere.
    """

    require_two_players(structure)
    utility.validate(structure)
    if not utility.is_zero_sum():
        raise ValueError(
            'the utility function is not zero-sum'
        )

    u1 = utility.payoff(1)
    levels = sorted(set(u1.values()))
    level_of = {x: k for k, x in enumerate(levels)}
    rank = {a: level_of[x] for a, x in u1.items()}
    vertices, outcomes = _outcome_tensor(structure, max_profiles)
    codes = np.array([
        [[rank[row[v]] for v in vertices] for row in x1_row]
        for x1_row in outcomes
    ])

    max_min = codes.min(axis = 1).max(axis = 0)
    min_max = codes.max(axis = 0).min(axis = 0)
    mismatch = np.flatnonzero(max_min != min_max)
    if mismatch.size:
        v = vertices[mismatch[0]]
        raise ContractViolationError(
            f'no pure positional saddle point from \'{v}\': max-min '
            f'{levels[max_min[mismatch[0]]]} differs from min-max '
            f'{levels[min_max[mismatch[0]]]}'
        )

    return {v: levels[k] for v, k in zip(vertices, max_min)}

def brute_force_value(
    structure: PositionalStructure,
    start: Vertex,
    utility: UtilityFunction,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> Fraction:

    values = brute_force_values(structure, utility, max_profiles)
    if start not in values:
        raise ValueError(
            f'\'{start}\' is not a vertex'
        )
    return values[start]

def brute_force_winners(
    structure: PositionalStructure,
    partition: WinLosePartition,
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> dict[Vertex, int]:
    """
    Returns the winner of the two-person win/lose game from every initial
    position by exhaustive enumeration: player 1 wins from v if some x₁
    wins against every x₂, player 2 if some x₂ wins against every x₁.

    Raises:
        ValueError: If the partition doesn't partition the outcome set;
        ValueError: If the number of profiles exceeds the cap;
        ContractViolationError: If neither or both players win somewhere.
    """

    partition.validate(structure)
    vertices, outcomes = _outcome_tensor(structure, max_profiles)
    wins = np.array([
        [[row[v] in partition.a1 for v in vertices] for row in x1_row]
        for x1_row in outcomes
    ], dtype = bool)

    player_1 = wins.all(axis = 1).any(axis = 0)
    player_2 = (~wins).all(axis = 0).any(axis = 0)
    winners = {}
    for v, w1, w2 in zip(vertices, player_1, player_2):
        if w1 == w2:
            raise ContractViolationError(
                f'the win/lose game from \'{v}\' is not determined by pure '
                f'positional strategies'
            )
        winners[v] = 1 if w1 else 2
    return winners

def strategy_wins(
    structure: PositionalStructure,
    player: int,
    strategy: Strategy,
    start: Vertex,
    winning: Iterable[str],
    max_profiles: int = DEFAULT_MAX_PROFILES
) -> bool:
    """
    Returns True if the player's strategy realises an outcome in `winning`
    from the start vertex against every opponent strategy.
    """

    require_two_players(structure)
    _check_cap(structure, max_profiles)
    winning = frozenset(winning)
    return all(
        trace_play(
            structure, StrategyProfile.combine(strategy, reply), start
        ).outcome.id in winning
        for reply in iter_strategies(structure, 3 - player)
    )

def _sample_orderings(
    n_outcomes: int,
    samples: int,
    rng: np.random.Generator
) -> np.ndarray:

    if math.factorial(n_outcomes) <= MAX_EXHAUSTIVE_ORDERINGS:
        return np.array(list(itertools.permutations(range(n_outcomes))))
    return rng.integers(0, n_outcomes, size = (samples, n_outcomes))

def check_solvability(
    table: NormalFormTable,
    samples: int = DEFAULT_UTILITY_SAMPLES,
    seed: int = DEFAULT_SEED,
    max_outcomes: int = MAX_SOLVABILITY_OUTCOMES
) -> SolvabilityReport:
    """
    Checks the solvability properties of a two-person game form.

    Win/lose solvability is decided exactly over all 2^|A| partitions of the
    outcomes appearing in the table. Zero-sum and Nash solvability are tested
    over a sample of utilities: every strict ordering of the outcomes when
    there are at most 5040, otherwise seeded random integer payoffs (ties
    included); each player 1 utility is paired with a random player 2
    ordering for the Nash test. The sampled bits can only err towards True.

    Args:
        table (NormalFormTable): Game form.
        samples (int, optional): Number of random utilities when orderings
            are not enumerated. Defaults to 1000.
        seed (int, optional): Sampling seed. Defaults to 0.
        max_outcomes (int, optional): Cap on |A|. Defaults to 12.

    Returns:
        SolvabilityReport: Solvability report.

    Raises:
        ValueError: If the table has more outcomes than the cap.
    """

    codes, outcome_ids = pd.factorize(table.outcome.to_numpy().ravel())
    codes = codes.reshape(table.shape)
    n_outcomes = len(outcome_ids)
    if n_outcomes > max_outcomes:
        raise ValueError(
            f'the game form has {n_outcomes} outcomes; partitions are only '
            f'enumerated for up to {max_outcomes}'
        )

    saddle_free = None
    for mask in range(2 ** n_outcomes):
        wins = ((mask >> codes) & 1).astype(bool)
        if not (wins.all(axis = 1).any() or (~wins).all(axis = 0).any()):
            saddle_free = frozenset(
                a for k, a in enumerate(outcome_ids) if mask >> k & 1
            )
            break

    rng = np.random.default_rng(seed)
    orderings = _sample_orderings(n_outcomes, samples, rng)
    zerosum = True
    nash = True
    for u1 in orderings:
        payoff_1 = u1[codes]
        if payoff_1.min(axis = 1).max() != payoff_1.max(axis = 0).min():
            zerosum = False
        for u2 in (-u1, rng.permutation(n_outcomes)):
            payoff_2 = u2[codes]
            best = (
                (payoff_1 == payoff_1.max(axis = 0, keepdims = True))
                & (payoff_2 == payoff_2.max(axis = 1, keepdims = True))
            )
            if not best.any():
                nash = False

    report = SolvabilityReport(
        winlose_solvable = saddle_free is None,
        zerosum_solvable_sampled = zerosum,
        nash_solvable_sampled = nash,
        saddle_free_partition = saddle_free,
        samples = len(orderings)
    )
    if not report.agrees:
        logger.warning(
            'solvability bits disagree (win/lose %s, zero-sum %s, nash %s) '
            'over %d sampled utilities',
            report.winlose_solvable,
            report.zerosum_solvable_sampled,
            report.nash_solvable_sampled,
            report.samples
        )
    return report

# =============================================================================
#                                     EOF
# =============================================================================
