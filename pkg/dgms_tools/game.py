#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import dataclasses
import itertools
import math
import pandas as pd
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .constants import (
    CYCLIC_OUTCOME_PREFIX,
    MERGED_OUTCOME_ID,
    GAME_FORM_MAX_PROFILES
)
from .digraph import (
    Digraph,
    SccDecomposition,
    Vertex,
    build_digraph,
    normalize_terminals,
    scc_decompose
)

Strategy = Mapping[Vertex, int]

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class Outcome:

    id: str
    components: frozenset[int]
    is_terminal: bool

@dataclass(frozen = True)
class PositionalStructure:
    """
    Positional game structure: a normalized digraph, the number of players,
    the owner of every non-terminal vertex, the strongly connected component
    decomposition, and the outcome set (one outcome per component with a
    dicycle, terminal loops included).

    `outcome_of_component` maps every component id outside J₀ to the id of
    its outcome; several components map to one outcome only after
    `dg_project()`.
    """

    digraph: Digraph
    players: int
    owner: dict[Vertex, int]
    decomposition: SccDecomposition
    outcomes: tuple[Outcome, ...]
    outcome_of_component: dict[int, str]
    outcome_by_id: dict[str, Outcome] = field(
        init = False, repr = False, compare = False
    )

    def __post_init__(
        self
    ) -> None:

        object.__setattr__(
            self,
            'outcome_by_id',
            {outcome.id: outcome for outcome in self.outcomes}
        )

    @property
    def outcome_ids(
        self
    ) -> tuple[str, ...]:

        return tuple(outcome.id for outcome in self.outcomes)

    def outcome(
        self,
        outcome_id: str
    ) -> Outcome:

        outcome = self.outcome_by_id.get(outcome_id)
        if outcome is None:
            raise ValueError(
                f'\'{outcome_id}\' is not an outcome of this game; outcomes '
                f'are {{{", ".join(self.outcome_ids)}}}'
            )
        return outcome

    def outcome_id_at(
        self,
        v: Vertex
    ) -> str:
        """
        Returns the id of the outcome realised by a dicycle through the
        specified vertex.
        """

        return self.outcome_of_component[self.decomposition.component_of[v]]

    def is_terminal(
        self,
        v: Vertex
    ) -> bool:

        return v not in self.owner

    def controlled(
        self,
        player: int
    ) -> tuple[Vertex, ...]:

        return tuple(
            v for v in self.digraph.vertices if self.owner.get(v) == player
        )

    def first_move(
        self,
        v: Vertex
    ) -> int:

        return self.digraph.out_edges[v][0].id

@dataclass(frozen = True)
class StrategyProfile:
    """
    Pure positional strategy profile stored as a single map from every
    non-terminal vertex to the id of the outgoing edge chosen there; the
    strategy x_i of player i is the restriction to the vertices player i
    controls.
    """

    moves: dict[Vertex, int]

    @classmethod
    def combine(
        cls,
        *strategies: Strategy
    ) -> StrategyProfile:

        moves: dict[Vertex, int] = {}
        for strategy in strategies:
            moves.update(strategy)
        return cls(moves = moves)

    def strategy(
        self,
        structure: PositionalStructure,
        player: int
    ) -> dict[Vertex, int]:

        return {v: self.moves[v] for v in structure.controlled(player)}

    def replace(
        self,
        strategy: Strategy
    ) -> StrategyProfile:

        return StrategyProfile(moves = {**self.moves, **strategy})

@dataclass(frozen = True)
class Lasso:

    stem: tuple[Vertex, ...]
    cycle: tuple[Vertex, ...]
    outcome: Outcome

@dataclass(frozen = True)
class UtilityFunction:
    """
    Utility function u : I × A → Q mapping (player, outcome id) pairs to
    exact rational profits.
    """

    values: dict[tuple[int, str], Fraction]

    @classmethod
    def from_payoffs(
        cls,
        *payoffs: Mapping[str, int | Fraction]
    ) -> UtilityFunction:
        """
        Returns a utility function from one outcome-to-profit mapping per
        player (player 1 first).
        """

        return cls(values = {
            (player, outcome_id): Fraction(value)
            for player, payoff in enumerate(payoffs, start = 1)
            for outcome_id, value in payoff.items()
        })

    @classmethod
    def zero_sum(
        cls,
        payoff: Mapping[str, int | Fraction],
        total: int | Fraction = 1
    ) -> UtilityFunction:
        """
        Returns the two-person zero-sum utility function with u₁ = `payoff`
        and u₂ = `total` − u₁.
        """

        return cls.from_payoffs(
            payoff,
            {a: Fraction(total) - Fraction(x) for a, x in payoff.items()}
        )

    @property
    def players(
        self
    ) -> int:

        return max((player for player, _ in self.values), default = 0)

    def __call__(
        self,
        player: int,
        outcome_id: str
    ) -> Fraction:

        return self.values[(player, outcome_id)]

    def payoff(
        self,
        player: int
    ) -> dict[str, Fraction]:

        return {a: x for (i, a), x in self.values.items() if i == player}

    def validate(
        self,
        structure: PositionalStructure
    ) -> None:
        """
        Validates that the utility function is total over the players and
        outcomes of the supplied structure.

        Raises:
            ValueError: If a (player, outcome) pair has no value;
            ValueError: If a value refers to an unknown player or outcome.
        """

        expected = {
            (player, outcome_id)
            for player in range(1, structure.players + 1)
            for outcome_id in structure.outcome_ids
        }
        missing = sorted(expected - set(self.values))
        if missing:
            player, outcome_id = missing[0]
            raise ValueError(
                f'no utility value for player {player} at outcome '
                f'\'{outcome_id}\''
            )
        unexpected = sorted(set(self.values) - expected)
        if unexpected:
            player, outcome_id = unexpected[0]
            raise ValueError(
                f'utility value for player {player} at \'{outcome_id}\' does '
                f'not match any player/outcome of the game'
            )

    def is_zero_sum(
        self
    ) -> bool:
        """
        Returns True if the utility function is two-person and u₁ + u₂ is the
        same for every outcome.
        """

        if self.players != 2:
            return False
        u1, u2 = self.payoff(1), self.payoff(2)
        if set(u1) != set(u2):
            return False
        return len({u1[a] + u2[a] for a in u1}) <= 1

    def is_winlose(
        self
    ) -> bool:

        return self.is_zero_sum() and set(self.values.values()) <= {-1, 1}

@dataclass(frozen = True)
class WinLosePartition:

    a1: frozenset[str]
    a2: frozenset[str]

    @classmethod
    def from_winning_set(
        cls,
        structure: PositionalStructure,
        a1: Iterable[str]
    ) -> WinLosePartition:
        """
        Returns the partition in which `a1` is winning for player 1 and every
        other outcome of the structure is winning for player 2.

        Raises:
            ValueError: If `a1` names an outcome the structure doesn't have.
        """

        a1 = frozenset(a1)
        for outcome_id in sorted(a1):
            structure.outcome(outcome_id)
        return cls(
            a1 = a1,
            a2 = frozenset(structure.outcome_ids) - a1
        )

    def winner(
        self,
        outcome_id: str
    ) -> int:

        return 1 if outcome_id in self.a1 else 2

    def pull_back(
        self,
        merge: Mapping[str, str]
    ) -> WinLosePartition:
        """
        Returns the partition of the original outcomes induced by this
        partition of projected outcomes through the merge map returned by
        `dg_project()`.
        """

        a1 = frozenset(
            a for a, projected in merge.items() if projected in self.a1
        )
        return WinLosePartition(a1 = a1, a2 = frozenset(merge) - a1)

    def validate(
        self,
        structure: PositionalStructure
    ) -> None:

        if self.a1 & self.a2:
            raise ValueError(
                f'outcomes {{{", ".join(sorted(self.a1 & self.a2))}}} are '
                f'winning for both players'
            )
        for outcome_id in sorted(self.a1 | self.a2):
            structure.outcome(outcome_id)
        missing = set(structure.outcome_ids) - (self.a1 | self.a2)
        if missing:
            raise ValueError(
                f'outcomes {{{", ".join(sorted(missing))}}} are not winning '
                f'for either player'
            )

@dataclass(frozen = True)
class NormalFormTable:
    """
    Two-person game form g : X₁ × X₂ → A as a table of outcome ids; rows are
    player 1's strategies and columns player 2's, in enumeration order.
    """

    strategies: tuple[
        tuple[dict[Vertex, int], ...], tuple[dict[Vertex, int], ...]
    ]
    outcome: pd.DataFrame

    @classmethod
    def from_outcomes(
        cls,
        rows: Iterable[Iterable[str]]
    ) -> NormalFormTable:
        """
        Returns a hand-built game form from a grid of outcome ids; strategies
        are anonymous (empty maps).
        """

        outcome = pd.DataFrame([list(row) for row in rows])
        outcome.index.name, outcome.columns.name = 'x1', 'x2'
        return cls(
            strategies = (
                tuple({} for _ in outcome.index),
                tuple({} for _ in outcome.columns)
            ),
            outcome = outcome
        )

    @property
    def shape(
        self
    ) -> tuple[int, int]:

        return self.outcome.shape

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def build_structure(
    digraph: Digraph,
    players: int,
    owner: Mapping[Vertex, int]
) -> PositionalStructure:
    """
    Returns a validated positional structure over the (normalized) digraph
    with the supplied owner map; the decomposition and outcome set are
    computed here.

    Terminal outcomes are named by their terminal vertex id; the outcome of a
    component with a dicycle is named 'c:' + the lexicographically smallest
    vertex id in the component.

    Args:
        digraph (Digraph): Digraph; normalized here if it is not already.
        players (int): Number of players (>= 1).
        owner (Mapping[Vertex, int]): Owner (1..players) of every non-terminal
            vertex.

    Returns:
        PositionalStructure: Positional structure.

    Raises:
        ValueError: If the number of players is < 1;
        ValueError: If a non-terminal vertex has no owner;
        ValueError: If a terminal vertex (or a non-vertex) has an owner;
        ValueError: If an owner is outside the range 1..players;
        ValueError: If two outcomes would share a name.
    """

    if players < 1:
        raise ValueError(
            f'a positional structure needs at least one player; got {players}'
        )

    digraph = normalize_terminals(digraph)

    for v, player in owner.items():
        if v not in digraph:
            raise ValueError(
                f'owner assigned to \'{v}\', which is not a vertex'
            )
        if digraph.is_terminal(v):
            raise ValueError(
                f'owner assigned to the terminal vertex \'{v}\''
            )
        if not 1 <= player <= players:
            raise ValueError(
                f'vertex \'{v}\' is owned by player {player}; players are '
                f'numbered 1..{players}'
            )
    for v in digraph.vertices:
        if not digraph.is_terminal(v) and v not in owner:
            raise ValueError(
                f'non-terminal vertex \'{v}\' has no owner'
            )

    decomposition = scc_decompose(digraph)

    outcome_of_component: dict[int, str] = {}
    outcomes: list[Outcome] = []
    named: set[str] = set()
    for j, component in enumerate(decomposition.components):
        if j in decomposition.j_zero:
            continue
        is_terminal = j in decomposition.j_terminal
        if is_terminal:
            outcome_id = str(component[0])
        else:
            outcome_id = CYCLIC_OUTCOME_PREFIX + min(map(str, component))
        if outcome_id in named:
            raise ValueError(
                f'two components would share the outcome name '
                f'\'{outcome_id}\''
            )
        outcome_of_component[j] = outcome_id
        named.add(outcome_id)
        outcomes.append(
            Outcome(
                id = outcome_id,
                components = frozenset({j}),
                is_terminal = is_terminal
            )
        )

    return PositionalStructure(
        digraph = digraph,
        players = players,
        owner = {v: owner[v] for v in digraph.vertices if v in owner},
        decomposition = decomposition,
        outcomes = tuple(sorted(outcomes, key = lambda outcome: outcome.id)),
        outcome_of_component = outcome_of_component
    )

def require_two_players(
    structure: PositionalStructure
) -> None:

    if structure.players != 2:
        raise ValueError(
            f'expected a two-person structure; got {structure.players} '
            f'players'
        )

def validate_profile(
    structure: PositionalStructure,
    profile: StrategyProfile
) -> None:
    """
    Validates that the profile maps every non-terminal vertex (and nothing
    else) to one of its own outgoing edges.

    Raises:
        ValueError: If a non-terminal vertex has no move;
        ValueError: If a move is assigned to a terminal or unknown vertex;
        ValueError: If a move's edge doesn't leave the vertex it is assigned
            to.
    """

    digraph = structure.digraph
    for v in structure.owner:
        if v not in profile.moves:
            raise ValueError(
                f'the strategy profile has no move at \'{v}\''
            )
    for v, edge_id in profile.moves.items():
        if v not in structure.owner:
            raise ValueError(
                f'the strategy profile assigns a move to \'{v}\', which is not '
                f'a controlled position'
            )
        edge = digraph.edge_by_id.get(edge_id)
        if edge is None or edge.source != v:
            raise ValueError(
                f'the move at \'{v}\' (edge {edge_id}) does not leave \'{v}\''
            )

def _successor(
    structure: PositionalStructure,
    profile: StrategyProfile,
    v: Vertex
) -> Vertex:

    if structure.is_terminal(v):
        return v
    try:
        edge_id = profile.moves[v]
    except KeyError:
        raise ValueError(
            f'the strategy profile has no move at \'{v}\''
        ) from None
    return structure.digraph.edge_by_id[edge_id].target

def trace_play(
    structure: PositionalStructure,
    profile: StrategyProfile,
    start: Vertex
) -> Lasso:
    """
    Returns the play ("lasso") defined by the profile from the start vertex:
    the walk that follows the chosen moves (terminals follow their loop)
    until a vertex repeats, split into a simple stem and the dicycle repeated
    forever.

    Args:
        structure (PositionalStructure): Positional structure.
        profile (StrategyProfile): Total strategy profile.
        start (Vertex): Initial position.

    Returns:
        Lasso: Stem, cycle, and the outcome of the cycle's component.

    Raises:
        ValueError: If the start vertex doesn't exist;
        ValueError: If the profile has no move at a visited vertex.
    """

    if start not in structure.digraph:
        raise ValueError(
            f'\'{start}\' is not a vertex'
        )

    visited: dict[Vertex, int] = {}
    path: list[Vertex] = []
    v = start
    while v not in visited:
        visited[v] = len(path)
        path.append(v)
        v = _successor(structure, profile, v)

    k = visited[v]
    cycle = tuple(path[k:])
    return Lasso(
        stem = tuple(path[:k]),
        cycle = cycle,
        outcome = structure.outcome(structure.outcome_id_at(cycle[0]))
    )

def play_outcomes(
    structure: PositionalStructure,
    profile: StrategyProfile
) -> dict[Vertex, str]:
    """
    Returns the outcome id of the play from every start vertex under the
    profile, in time linear in the number of vertices (each vertex is walked
    once; the move map is a functional graph).

    Args:
        structure (PositionalStructure): Positional structure.
        profile (StrategyProfile): Total strategy profile.

    Returns:
        dict[Vertex, str]: Outcome id per start vertex.
    """

    resolved: dict[Vertex, str] = {}
    for start in structure.digraph.vertices:
        path: list[Vertex] = []
        on_path: set[Vertex] = set()
        v = start
        while v not in resolved and v not in on_path:
            path.append(v)
            on_path.add(v)
            v = _successor(structure, profile, v)
        outcome_id = (
            resolved[v] if v in resolved else structure.outcome_id_at(v)
        )
        for u in path:
            resolved[u] = outcome_id
    return resolved

def reachable_outcomes(
    structure: PositionalStructure,
    player: int,
    strategy: Strategy,
    start: Vertex
) -> frozenset[str]:
    """
    Returns g(x_i): the outcomes of the plays from the start vertex over all
    opponent strategies when player i plays `strategy`.

    The set is computed on the digraph restricted to the chosen move at each
    of player i's vertices (all moves elsewhere): an outcome belongs to it iff
    the restricted digraph has a dicycle in its component reachable from the
    start vertex.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        player (int): Player fixing a strategy.
        strategy (Strategy): Player i's strategy.
        start (Vertex): Initial position.

    Returns:
        frozenset[str]: Outcome ids.

    Raises:
        ValueError: If the structure is not two-person;
        ValueError: If the strategy has no move at a reachable vertex of
            player i.
    """

    require_two_players(structure)
    digraph = structure.digraph
    if start not in digraph:
        raise ValueError(
            f'\'{start}\' is not a vertex'
        )

    def restricted_edges(v):
        if structure.owner.get(v) != player:
            return digraph.out_edges[v]
        try:
            return (digraph.edge_by_id[strategy[v]],)
        except KeyError:
            raise ValueError(
                f'the strategy of player {player} has no move at \'{v}\''
            ) from None

    reached = {start: None}
    queue = deque([start])
    edges = []
    while queue:
        v = queue.popleft()
        for edge in restricted_edges(v):
            edges.append((edge.id, edge.source, edge.target))
            if edge.target not in reached:
                reached[edge.target] = None
                queue.append(edge.target)

    restricted = scc_decompose(build_digraph(reached, edges))
    return frozenset(
        structure.outcome_id_at(component[0])
        for component, cyclic in zip(
            restricted.components, restricted.has_dicycle
        )
        if cyclic
    )

def dg_project(
    structure: PositionalStructure
) -> tuple[PositionalStructure, dict[str, str]]:
    """
    Returns the DG projection of the structure, in which the outcomes of all
    non-terminal components with a dicycle are identified into the single
    outcome 'c', together with the merge map sending each original outcome id
    to its projected outcome id.

    Args:
        structure (PositionalStructure): Positional structure.

    Returns:
        tuple[PositionalStructure, dict[str, str]]: Projected structure and
        merge map.

    Raises:
        ValueError: If a terminal vertex is already named 'c'.
    """

    merged = frozenset(
        j for outcome in structure.outcomes if not outcome.is_terminal
        for j in outcome.components
    )
    if not merged:
        return structure, {a: a for a in structure.outcome_ids}
    if MERGED_OUTCOME_ID in structure.outcome_ids:
        raise ValueError(
            f'a terminal outcome is already named \'{MERGED_OUTCOME_ID}\'; '
            f'cannot name the merged DG outcome'
        )

    merge = {
        outcome.id: outcome.id if outcome.is_terminal else MERGED_OUTCOME_ID
        for outcome in structure.outcomes
    }
    outcomes = [
        outcome for outcome in structure.outcomes if outcome.is_terminal
    ]
    outcomes.append(
        Outcome(
            id = MERGED_OUTCOME_ID,
            components = merged,
            is_terminal = False
        )
    )
    projected = dataclasses.replace(
        structure,
        outcomes = tuple(sorted(outcomes, key = lambda outcome: outcome.id)),
        outcome_of_component = {
            j: merge[outcome_id]
            for j, outcome_id in structure.outcome_of_component.items()
        }
    )
    return projected, merge

def strategy_count(
    structure: PositionalStructure,
    player: int
) -> int:

    return math.prod(
        len(structure.digraph.out_edges[v])
        for v in structure.controlled(player)
    )

def profile_count(
    structure: PositionalStructure
) -> int:

    return math.prod(
        len(structure.digraph.out_edges[v]) for v in structure.owner
    )

def iter_strategies(
    structure: PositionalStructure,
    player: int
) -> Iterator[dict[Vertex, int]]:
    """
    Yields every pure positional strategy of the player as a mixed-radix
    counter over the player's vertices in vertex order (the last vertex
    varies fastest; moves in edge insertion order).
    """

    vertices = structure.controlled(player)
    choices = [
        [edge.id for edge in structure.digraph.out_edges[v]]
        for v in vertices
    ]
    for moves in itertools.product(*choices):
        yield dict(zip(vertices, moves))

def expand_game_form(
    structure: PositionalStructure,
    start: Vertex,
    max_profiles: int = GAME_FORM_MAX_PROFILES
) -> NormalFormTable:
    """
    Returns the two-person game form g : X₁ × X₂ → A for plays from the start
    vertex, tracing every strategy profile.

    Args:
        structure (PositionalStructure): Two-person positional structure.
        start (Vertex): Initial position.
        max_profiles (int, optional): Cap on |X₁|·|X₂|. Defaults to 10⁶.

    Returns:
        NormalFormTable: Outcome table.

    Raises:
        ValueError: If the structure is not two-person;
        ValueError: If the number of strategy profiles exceeds the cap.
    """

    require_two_players(structure)
    n_profiles = strategy_count(structure, 1) * strategy_count(structure, 2)
    if n_profiles > max_profiles:
        raise ValueError(
            f'the game form has {n_profiles} strategy profiles; the cap is '
            f'{max_profiles}'
        )

    strategies = (
        tuple(iter_strategies(structure, 1)),
        tuple(iter_strategies(structure, 2))
    )
    rows = [
        [
            trace_play(
                structure, StrategyProfile.combine(x1, x2), start
            ).outcome.id
            for x2 in strategies[1]
        ]
        for x1 in strategies[0]
    ]
    outcome = pd.DataFrame(rows, columns = range(len(strategies[1])))
    outcome.index.name, outcome.columns.name = 'x1', 'x2'

    return NormalFormTable(strategies = strategies, outcome = outcome)

# =============================================================================
#                                     EOF
# =============================================================================
