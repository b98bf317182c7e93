#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import logging
from dataclasses import dataclass

from .digraph import Vertex
from .errors import ContractViolationError
from .game import (
    Outcome,
    PositionalStructure,
    StrategyProfile,
    UtilityFunction,
    WinLosePartition,
    reachable_outcomes,
    require_two_players
)
from .winlose import solve_winlose

logger = logging.getLogger(__name__)

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class PartitionStep:
    """
    One visited partition A = W ∪ W₁ ∪ W₂ of the outcome set and the action
    that produced it ('initial', 'moved to W1', 'moved to W2' or 'stuck');
    `candidate` is the outcome a* examined from the partition (None on the
    initial step).
    """

    w: frozenset[str]
    w1: frozenset[str]
    w2: frozenset[str]
    action: str
    candidate: str | None = None

@dataclass(frozen = True)
class NashCertificate:

    profile: StrategyProfile
    equilibrium_outcome: Outcome
    partition_trace: tuple[PartitionStep, ...]
    solve_count: int
    simple: bool

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def build_nash(
    structure: PositionalStructure,
    utility: UtilityFunction,
    start: Vertex
) -> NashCertificate:
    """
    Returns a pure positional Nash equilibrium of the two-person game from
    the start vertex, built from at most 2|A| win/lose solves.

    Starting from W = A, W₁ = W₂ = ∅, the loop picks the worst outcome a* of
    W for player 1 and asks whether player 2 can force W₁ ∪ {a*}; if not, a*
    moves to W₁. Otherwise it asks whether player 1 can force W₂ ∪ W₂(a*),
    W₂(a*) being the outcomes of W no better than a* for player 2; if not,
    W₂(a*) moves to W₂. When both punishments exist the two winning
    strategies form an equilibrium with outcome a*.

    Ties in utility are broken by the lexicographically smallest outcome id.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        utility (UtilityFunction): Arbitrary rational utility function.
        start (Vertex): Initial position v0.

    Returns:
        NashCertificate: Equilibrium profile, equilibrium outcome, visited
        partitions, and the number of win/lose solves performed.

    Raises:
        ValueError: If the structure is not two-person;
        ValueError: If the utility function is not total;
        ValueError: If the start vertex doesn't exist.
    """

    require_two_players(structure)
    utility.validate(structure)
    if start not in structure.digraph:
        raise ValueError(
            f'\'{start}\' is not a vertex'
        )

    u1, u2 = utility.payoff(1), utility.payoff(2)
    w = frozenset(structure.outcome_ids)
    w1: frozenset[str] = frozenset()
    w2: frozenset[str] = frozenset()
    trace = [PartitionStep(w = w, w1 = w1, w2 = w2, action = 'initial')]
    solve_count = 0

    def solve(a1):
        nonlocal solve_count
        solve_count += 1
        return solve_winlose(
            structure, WinLosePartition.from_winning_set(structure, a1)
        )

    while w:
        candidate = min(w, key = lambda a: (u1[a], a))

        punish_1 = solve(frozenset(structure.outcome_ids) - (w1 | {candidate}))
        if punish_1.winner[start] != 2:
            w, w1 = w - {candidate}, w1 | {candidate}
            trace.append(
                PartitionStep(
                    w = w, w1 = w1, w2 = w2, action = 'moved to W1',
                    candidate = candidate
                )
            )
            logger.debug('player 2 cannot punish at \'%s\'', candidate)
            continue
        x2 = punish_1.profile.strategy(structure, 2)

        worse = frozenset(a for a in w if u2[a] <= u2[candidate])
        punish_2 = solve(w2 | worse)
        if punish_2.winner[start] != 1:
            w, w2 = w - worse, w2 | worse
            trace.append(
                PartitionStep(
                    w = w, w1 = w1, w2 = w2, action = 'moved to W2',
                    candidate = candidate
                )
            )
            logger.debug('player 1 cannot punish at \'%s\'', candidate)
            continue
        x1 = punish_2.profile.strategy(structure, 1)

        trace.append(
            PartitionStep(
                w = w, w1 = w1, w2 = w2, action = 'stuck',
                candidate = candidate
            )
        )
        logger.debug(
            'partition stuck at \'%s\' after %d win/lose solves',
            candidate,
            solve_count
        )
        profile = StrategyProfile.combine(x1, x2)
        outcome = structure.outcome(candidate)
        return NashCertificate(
            profile = profile,
            equilibrium_outcome = outcome,
            partition_trace = tuple(trace),
            solve_count = solve_count,
            simple = _is_simple(structure, profile, outcome, start)
        )

    raise ContractViolationError(
        f'the outcome set was exhausted after {solve_count} win/lose solves '
        f'without finding an equilibrium from \'{start}\''
    )

def check_simple(
    structure: PositionalStructure,
    certificate: NashCertificate,
    start: Vertex
) -> bool:
    """
    Returns True if g(x₁) ∩ g(x₂) = {a*} for the certificate's profile, i.e.,
    if each player's strategy on its own restricts the reachable outcomes so
    that only the equilibrium outcome is common to both.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        certificate (NashCertificate): Certificate built for `start`.
        start (Vertex): Initial position v0.

    Returns:
        bool: True if the equilibrium is simple.
    """

    return _is_simple(
        structure,
        certificate.profile,
        certificate.equilibrium_outcome,
        start
    )

def _is_simple(
    structure: PositionalStructure,
    profile: StrategyProfile,
    outcome: Outcome,
    start: Vertex
) -> bool:

    g1 = reachable_outcomes(
        structure, 1, profile.strategy(structure, 1), start
    )
    g2 = reachable_outcomes(
        structure, 2, profile.strategy(structure, 2), start
    )
    return g1 & g2 == {outcome.id}

# =============================================================================
#                                     EOF
# =============================================================================
