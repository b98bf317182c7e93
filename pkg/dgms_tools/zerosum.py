#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .digraph import Vertex
from .errors import ContractViolationError
from .game import (
    PositionalStructure,
    StrategyProfile,
    UtilityFunction,
    play_outcomes,
    require_two_players
)
from .winlose import (
    WorkingGame,
    eliminate_component,
    solve_component
)

logger = logging.getLogger(__name__)

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class DgComponentSolution:

    value: dict[Vertex, Fraction]
    strategy: dict[Vertex, int]

@dataclass(frozen = True)
class ZeroSumSolution:
    """
    Solution of a two-person zero-sum game: player 1's guaranteed payoff from
    every vertex, a single subgame-perfect saddle-point profile, and the
    outcome the profile realises from every vertex.
    """

    value: dict[Vertex, Fraction]
    profile: StrategyProfile
    outcome_at: dict[Vertex, str]

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def solve_dg_component(
    structure: PositionalStructure,
    component: Sequence[Vertex],
    cycle_value: Fraction | None,
    exit_values: Mapping[Vertex, Fraction],
    ranking: Mapping[Fraction, int] | None = None
) -> DgComponentSolution:
    """
    Solves the zero-sum DG subgame on one component whose every exit enters a
    valued terminal loop (player 1 maximises, player 2 minimises).

    The solve is a descending sweep over the distinct values reachable from
    the component (exit values and the dicycle value): for each threshold t,
    the win/lose game with A₁ = {outcomes worth >= t} is solved, and a vertex
    takes the largest t from which player 1 wins. Player 1 plays the winning
    move of the threshold-t game at a vertex of value t; player 2 plays the
    winning move of the next-higher threshold's game (its first move at the
    top threshold).

    Args:
        structure (PositionalStructure): Two-person positional structure.
        component (Sequence[Vertex]): Vertices of the component.
        cycle_value (Fraction | None): u₁ of the component's dicycle outcome;
            None if the component has no dicycle.
        exit_values (Mapping[Vertex, Fraction]): Value of every vertex entered
            by an edge leaving the component.
        ranking (Mapping[Fraction, int], optional): Precomputed rank of every
            value in a global sort; if None, the component's values are
            sorted directly.

    Returns:
        DgComponentSolution: Value and optimal move per vertex.

    Raises:
        ValueError: If the component has an exit to a vertex without a value.
    """

    digraph = structure.digraph
    members = set(component)
    exits: dict[Vertex, Fraction] = {}
    for v in component:
        for edge in digraph.out_edges[v]:
            w = edge.target
            if w in members or w in exits:
                continue
            if w not in exit_values:
                raise ValueError(
                    f'the component of \'{v}\' has an exit to the non-valued '
                    f'vertex \'{w}\''
                )
            exits[w] = exit_values[w]

    local = set(exits.values())
    if cycle_value is not None:
        local.add(cycle_value)
    thresholds = sorted(
        local,
        key = ranking.__getitem__ if ranking is not None else None,
        reverse = True
    )

    value: dict[Vertex, Fraction] = {}
    strategy: dict[Vertex, int] = {}
    previous = None
    for t in thresholds:
        result = solve_component(
            structure,
            component,
            {w: 1 if x >= t else 2 for w, x in exits.items()},
            None if cycle_value is None else (1 if cycle_value >= t else 2)
        )
        for v in component:
            if v in value or result.winner[v] != 1:
                continue
            value[v] = t
            if structure.owner[v] == 1:
                strategy[v] = result.strategy[v]
            elif previous is not None:
                strategy[v] = previous.strategy[v]
            else:
                strategy[v] = structure.first_move(v)
        if len(value) == len(component):
            break
        previous = result

    return DgComponentSolution(value = value, strategy = strategy)

def solve_zerosum(
    structure: PositionalStructure,
    utility: UtilityFunction
) -> ZeroSumSolution:
    """
    Solves a two-person zero-sum game by backward induction over the
    condensation: terminal loops take u₁ of their outcome, then components
    are solved sinks-first with `solve_dg_component()` and eliminated in
    favour of terminal loops carrying the computed values.

    Distinct u₁ values are sorted once; every component orders its
    thresholds by that global rank.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        utility (UtilityFunction): Zero-sum utility function (u₁ + u₂
            constant over the outcomes).

    Returns:
        ZeroSumSolution: Value, saddle-point move, and realised outcome per
        vertex.

    Raises:
        ValueError: If the structure is not two-person;
        ValueError: If the utility function is not total or not zero-sum.
    """

    require_two_players(structure)
    utility.validate(structure)
    if not utility.is_zero_sum():
        raise ValueError(
            'the utility function is not zero-sum; u(1, a) + u(2, a) must be '
            'the same for every outcome a'
        )

    decomposition = structure.decomposition
    u1 = utility.payoff(1)
    ranking = {x: rank for rank, x in enumerate(sorted(set(u1.values())))}
    working = WorkingGame(structure)
    moves: dict[Vertex, int] = {}

    for j in range(len(decomposition)):
        component = decomposition.components[j]
        outcome_id = structure.outcome_of_component.get(j)
        if j in decomposition.j_terminal:
            eliminate_component(working, j, {component[0]: u1[outcome_id]})
            continue
        result = solve_dg_component(
            structure,
            component,
            u1[outcome_id] if decomposition.has_dicycle[j] else None,
            working.labels,
            ranking
        )
        moves.update(result.strategy)
        eliminate_component(working, j, result.value)

    profile = StrategyProfile(moves = {v: moves[v] for v in structure.owner})
    value = {v: working.labels[v] for v in structure.digraph.vertices}
    outcome_at = play_outcomes(structure, profile)
    for v, outcome_id in outcome_at.items():
        if u1[outcome_id] != value[v]:
            raise ContractViolationError(
                f'the saddle-point profile realises \'{outcome_id}\' from '
                f'\'{v}\' (u1 = {u1[outcome_id]}) but the value of \'{v}\' is '
                f'{value[v]}'
            )

    logger.debug(
        'solved zero-sum game in %d elimination steps over %d distinct values',
        working.steps,
        len(ranking)
    )

    return ZeroSumSolution(
        value = value,
        profile = profile,
        outcome_at = outcome_at
    )

# =============================================================================
#                                     EOF
# =============================================================================
