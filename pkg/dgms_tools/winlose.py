#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .digraph import Vertex
from .errors import ContractViolationError
from .game import (
    PositionalStructure,
    StrategyProfile,
    WinLosePartition,
    require_two_players
)

logger = logging.getLogger(__name__)

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class Attractor:
    """
    Attractor W of a target set for one player, built in layers W⁰ = T ⊆ W¹
    ⊆ …; `strategy` moves every vertex of the attracting player in W \\ T
    from its layer to a lower one.
    """

    vertices: frozenset[Vertex]
    strategy: dict[Vertex, int]
    layer: dict[Vertex, int]

@dataclass(frozen = True)
class ComponentSolution:

    winner: dict[Vertex, int]
    strategy: dict[Vertex, int]
    layer: dict[Vertex, int | None]

@dataclass(frozen = True)
class WinLoseSolution:
    """
    Solution of a two-person win/lose game: the winner at every vertex, a
    single subgame-perfect saddle-point profile, the attractor layer of every
    vertex won by enforcing an exit (None elsewhere), and the number of
    component elimination steps performed (|J| - |J₀|).
    """

    winner: dict[Vertex, int]
    profile: StrategyProfile
    layer: dict[Vertex, int | None]
    steps: int

    def region(
        self,
        player: int
    ) -> frozenset[Vertex]:

        return frozenset(v for v, w in self.winner.items() if w == player)

@dataclass
class WorkingGame:
    """
    Mutable view of a structure under backward induction: eliminated
    components have had their edges replaced by labelled terminal loops
    (`labels` holds the label of every eliminated vertex, a winner for
    win/lose games and a value for zero-sum games). The original structure is
    never modified.
    """

    structure: PositionalStructure
    labels: dict[Vertex, Any] = field(default_factory = dict)
    eliminated: set[int] = field(default_factory = set)
    steps: int = 0

    def exits(
        self,
        j: int
    ) -> list[Vertex]:
        """
        Returns the distinct vertices outside component j entered by an edge
        leaving it, in edge order.
        """

        decomposition = self.structure.decomposition
        exits = {}
        for v in decomposition.components[j]:
            for edge in self.structure.digraph.out_edges[v]:
                if decomposition.component_of[edge.target] != j:
                    exits[edge.target] = None
        return list(exits)

    def open_cyclic_count(
        self
    ) -> int:
        """
        Returns the number of strongly connected components, terminal loops
        excluded, that still contain a dicycle.
        """

        decomposition = self.structure.decomposition
        return sum(
            1 for j, cyclic in enumerate(decomposition.has_dicycle)
            if cyclic
            and j not in decomposition.j_terminal
            and j not in self.eliminated
        )

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def attractor(
    structure: PositionalStructure,
    component: Iterable[Vertex],
    targets: Iterable[Vertex],
    player: int
) -> Attractor:
    """
    Returns the attractor of the target set for the player inside the
    component: the least set W ⊇ T closed under adding a vertex of the
    component when (i) it belongs to the opponent and every move enters W,
    or (ii) it belongs to the player and some move enters W.

    The fixpoint is evaluated with a FIFO queue and a per-vertex counter of
    moves not yet known to enter W, in O(|V^j| + |E^j|); the FIFO order
    yields the layers W⁰ ⊆ W¹ ⊆ … of the layered definition.

    Args:
        structure (PositionalStructure): Positional structure.
        component (Iterable[Vertex]): Non-terminal vertices in which to
            attract.
        targets (Iterable[Vertex]): Target set T (layer 0), typically labelled
            terminal loops entered from the component.
        player (int): Attracting player.

    Returns:
        Attractor: Attractor vertices (targets included), attracting
        strategy, and layer per vertex.
    """

    digraph = structure.digraph
    predecessors = defaultdict(list)
    pending: dict[Vertex, int] = {}
    for v in component:
        edges = digraph.out_edges[v]
        pending[v] = len(edges)
        for edge in edges:
            predecessors[edge.target].append(edge)

    layer = {t: 0 for t in targets}
    strategy: dict[Vertex, int] = {}
    queue = deque(layer)
    while queue:
        w = queue.popleft()
        for edge in predecessors.get(w, ()):
            v = edge.source
            if v in layer:
                continue
            if structure.owner[v] == player:
                strategy[v] = edge.id
            else:
                pending[v] -= 1
                if pending[v]:
                    continue
            layer[v] = layer[w] + 1
            queue.append(v)

    return Attractor(
        vertices = frozenset(layer),
        strategy = strategy,
        layer = layer
    )

def solve_component(
    structure: PositionalStructure,
    component: Sequence[Vertex],
    exit_winner: Mapping[Vertex, int],
    cycle_winner: int | None
) -> ComponentSolution:
    """
    Solves the win/lose game on one component whose every exit enters a
    labelled terminal loop.

    The player who doesn't win the component's dicycle outcome (player 1 if
    the component has no dicycle) wins exactly on the attractor of the exits
    they already win; the other player wins on the rest of the component by
    never entering that attractor, preferring moves that stay inside the
    component. Losing vertices play their first move.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        component (Sequence[Vertex]): Vertices of the component.
        exit_winner (Mapping[Vertex, int]): Winner label of every vertex
            entered by an edge leaving the component.
        cycle_winner (int | None): Player winning the component's dicycle
            outcome; None if the component has no dicycle.

    Returns:
        ComponentSolution: Winner, move, and attractor layer per vertex.

    Raises:
        ValueError: If an exit of the component has no winner label.
    """

    digraph = structure.digraph
    members = set(component)
    favoured = cycle_winner if cycle_winner is not None else 2
    attracting = 3 - favoured

    targets = {}
    for v in component:
        for edge in digraph.out_edges[v]:
            w = edge.target
            if w in members:
                continue
            label = exit_winner.get(w)
            if label is None:
                raise ValueError(
                    f'the component of \'{v}\' has an exit to the unsolved '
                    f'vertex \'{w}\''
                )
            if label == attracting:
                targets[w] = None

    region = attractor(structure, component, targets, attracting)

    winner: dict[Vertex, int] = {}
    strategy: dict[Vertex, int] = {}
    layer: dict[Vertex, int | None] = {}
    for v in component:
        owner = structure.owner[v]
        if v in region.layer:
            winner[v] = attracting
            layer[v] = region.layer[v]
            strategy[v] = region.strategy.get(v, structure.first_move(v))
            continue
        winner[v] = favoured
        layer[v] = None
        if owner != favoured:
            strategy[v] = structure.first_move(v)
            continue
        edges = digraph.out_edges[v]
        stay = [
            edge for edge in edges
            if edge.target in members and edge.target not in region.layer
        ]
        safe = stay or [
            edge for edge in edges if edge.target not in region.layer
        ]
        if not safe:
            raise ContractViolationError(
                f'\'{v}\' is outside the attractor but every move enters it'
            )
        strategy[v] = safe[0].id

    return ComponentSolution(winner = winner, strategy = strategy, layer = layer)

def eliminate_component(
    working: WorkingGame,
    j: int,
    labels: Mapping[Vertex, Any]
) -> WorkingGame:
    """
    Eliminates component j from the working game: every vertex of the
    component loses its edges and becomes a terminal loop carrying its label.
    Eliminating a component with a dicycle counts as one step.

    Args:
        working (WorkingGame): Working game (modified in place).
        j (int): Component id.
        labels (Mapping[Vertex, Any]): Label of every vertex of the component.

    Returns:
        WorkingGame: The same working game, for chaining.

    Raises:
        ValueError: If the component was already eliminated;
        ValueError: If a vertex of the component has no label;
        ValueError: If the component has an exit that was not eliminated.
    """

    decomposition = working.structure.decomposition
    if j in working.eliminated:
        raise ValueError(
            f'component {j} has already been eliminated'
        )
    component = decomposition.components[j]
    for v in component:
        if v not in labels:
            raise ValueError(
                f'no label for \'{v}\'; component {j} is not fully solved'
            )
    for w in working.exits(j):
        if w not in working.labels:
            raise ValueError(
                f'component {j} has an exit to \'{w}\', which has not been '
                f'eliminated'
            )

    for v in component:
        working.labels[v] = labels[v]
    working.eliminated.add(j)
    if decomposition.has_dicycle[j]:
        working.steps += 1

    return working

def solve_winlose(
    structure: PositionalStructure,
    partition: WinLosePartition
) -> WinLoseSolution:
    """
    Solves a two-person win/lose game by backward induction over the
    condensation: terminal loops are labelled first, then terminal
    (sink) components are won wholesale by the player who wins their dicycle
    outcome, then the remaining components are solved sinks-first with
    `solve_component()` and eliminated; linear time overall.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        partition (WinLosePartition): Winning outcome sets of both players.

    Returns:
        WinLoseSolution: Winner per vertex and a subgame-perfect saddle
        point.

    Raises:
        ValueError: If the structure is not two-person;
        ValueError: If the partition doesn't partition the outcome set.
    """

    require_two_players(structure)
    partition.validate(structure)

    decomposition = structure.decomposition
    working = WorkingGame(structure)
    winner: dict[Vertex, int] = {}
    moves: dict[Vertex, int] = {}
    layer: dict[Vertex, int | None] = {}

    for j in sorted(decomposition.j_terminal):
        t = decomposition.components[j][0]
        winner[t] = partition.winner(structure.outcome_of_component[j])
        layer[t] = None
        eliminate_component(working, j, {t: winner[t]})

    def solve(j):
        cycle_winner = (
            partition.winner(structure.outcome_of_component[j])
            if decomposition.has_dicycle[j] else None
        )
        result = solve_component(
            structure,
            decomposition.components[j],
            working.labels,
            cycle_winner
        )
        winner.update(result.winner)
        moves.update(result.strategy)
        layer.update(result.layer)
        eliminate_component(working, j, result.winner)

    open_components = [
        j for j in range(len(decomposition)) if j not in working.eliminated
    ]
    sinks = [j for j in open_components if not working.exits(j)]
    for j in sinks:
        logger.debug(
            'component %d is terminal; player %d wins it wholesale',
            j,
            partition.winner(structure.outcome_of_component[j])
        )
        solve(j)
    for j in open_components:
        if j not in working.eliminated:
            solve(j)

    logger.debug(
        'solved win/lose game in %d elimination steps', working.steps
    )

    return WinLoseSolution(
        winner = {v: winner[v] for v in structure.digraph.vertices},
        profile = StrategyProfile(
            moves = {v: moves[v] for v in structure.owner}
        ),
        layer = {v: layer[v] for v in structure.digraph.vertices},
        steps = working.steps
    )

# =============================================================================
#                                     EOF
# =============================================================================
