#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import math
import numpy as np
from dataclasses import dataclass

from .digraph import build_digraph
from .game import (
    PositionalStructure,
    build_structure
)

# =============================================================================
#                                   CLASSES
# =============================================================================

@dataclass(frozen = True)
class RandomGameConfig:

    num_vertices: int
    num_players: int
    edge_density: float
    terminal_fraction: float

# =============================================================================
#                                  CONSTANTS
# =============================================================================

_DENSITY_SCALE: int = 1_000_000

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def gen_household(
    n: int
) -> PositionalStructure:
    """
    Returns the n-player household game: positions v1..vn on a directed
    cycle (v1 -> v2 -> ... -> vn -> v1), each vi with an exit to its own
    terminal ti; player i controls vi alone. For n = 1 the cycle is the loop
    v1 -> v1.

    Args:
        n (int): Number of players (>= 1).

    Returns:
        PositionalStructure: Household game with n + 1 outcomes.

    Raises:
        ValueError: If n < 1.
    """

    if n < 1:
        raise ValueError(
            f'the household game needs at least one player; got {n}'
        )

    positions = [f'v{i}' for i in range(1, n + 1)]
    terminals = [f't{i}' for i in range(1, n + 1)]
    edges = [
        (positions[i], positions[(i + 1) % n]) for i in range(n)
    ] + list(zip(positions, terminals))

    digraph = build_digraph(
        positions + terminals,
        ((k, source, target) for k, (source, target) in enumerate(edges))
    )
    return build_structure(
        digraph, n, {v: i for i, v in enumerate(positions, start = 1)}
    )

def gen_random(
    num_vertices: int,
    num_players: int,
    edge_density: float,
    terminal_fraction: float,
    seed: int
) -> PositionalStructure:
    """
    Returns a random positional structure. The last
    round(`terminal_fraction` · `num_vertices`) vertices are terminals; every
    other vertex gets an edge to each vertex (itself included, as its loop)
    with probability `edge_density`, plus one random edge to another vertex
    if it drew none, and a uniformly random owner.

    Probabilities are compared as integers in millionths against draws of
    `numpy.random.default_rng(seed)`, so the output is bit-identical for a
    given (parameters, seed) on every platform.

    Args:
        num_vertices (int): Number of vertices (named v0, v1, ...).
        num_players (int): Number of players (>= 1).
        edge_density (float): Edge probability in [0, 1].
        terminal_fraction (float): Fraction of terminal vertices in [0, 1].
        seed (int): Random seed.

    Returns:
        PositionalStructure: Positional structure.

    Raises:
        ValueError: If a parameter is out of range;
        ValueError: If the parameters leave no controlled position, or a
            single vertex that cannot move anywhere.
    """

    if num_vertices < 1:
        raise ValueError(
            f'the number of vertices must be >= 1; got {num_vertices}'
        )
    if num_players < 1:
        raise ValueError(
            f'the number of players must be >= 1; got {num_players}'
        )
    for name, value in (
        ('edge density', edge_density),
        ('terminal fraction', terminal_fraction)
    ):
        if not 0.0 <= value <= 1.0:
            raise ValueError(
                f'the {name} must lie in [0, 1]; got {value}'
            )

    n_terminals = math.floor(terminal_fraction * num_vertices + 0.5)
    n_controlled = num_vertices - n_terminals
    if n_controlled == 0:
        raise ValueError(
            f'a terminal fraction of {terminal_fraction} leaves no controlled '
            f'position among {num_vertices} vertices'
        )
    if num_vertices < 2:
        raise ValueError(
            'a controlled position needs another vertex to move to; got a '
            'single vertex'
        )

    rng = np.random.default_rng(seed)
    threshold = math.floor(edge_density * _DENSITY_SCALE + 0.5)
    vertices = [f'v{k}' for k in range(num_vertices)]
    edges: list[tuple[int, str, str]] = []
    owner: dict[str, int] = {}
    for k in range(n_controlled):
        draws = rng.integers(0, _DENSITY_SCALE, size = num_vertices)
        targets = [int(w) for w in np.flatnonzero(draws < threshold)]
        if not any(w != k for w in targets):
            w = int(rng.integers(0, num_vertices - 1))
            targets.append(w if w < k else w + 1)
        for w in targets:
            edges.append((len(edges), vertices[k], vertices[w]))
        owner[vertices[k]] = int(rng.integers(1, num_players + 1))

    return build_structure(
        build_digraph(vertices, edges), num_players, owner
    )

def gen_random_from_config(
    config: RandomGameConfig | str,
    seed: int
) -> PositionalStructure:
    """
    Returns a random positional structure drawn with the parameters of a
    `RandomGameConfig` or the name of one in `RANDOM_GAME_CONFIGS`.

    Raises:
        ValueError: If the config name is not supported.
    """

    if isinstance(config, str):
        try:
            config = RANDOM_GAME_CONFIGS[config]
        except KeyError:
            raise ValueError(
                f'\'{config}\' is not a supported preset; supported presets '
                f'are {{{", ".join(RANDOM_GAME_CONFIGS.keys())}}}'
            ) from None

    return gen_random(
        config.num_vertices,
        config.num_players,
        config.edge_density,
        config.terminal_fraction,
        seed
    )

def gen_bench_chain(
    num_components: int
) -> PositionalStructure:
    """
    Returns a two-person benchmark chain of `num_components` 2-cycles
    (a_k, b_k), a_k controlled by player 1 and b_k by player 2; both
    vertices of a cycle exit into the next one (a_k -> a_{k+1},
    b_k -> b_{k+1}), and the last cycle exits to the terminals t1 and t2.

    Raises:
        ValueError: If `num_components` < 1.
    """

    if num_components < 1:
        raise ValueError(
            f'the benchmark chain needs at least one component; got '
            f'{num_components}'
        )

    vertices = []
    owner = {}
    edges = []
    for k in range(num_components):
        a, b = f'a{k}', f'b{k}'
        vertices += [a, b]
        owner[a], owner[b] = 1, 2
        if k + 1 < num_components:
            exits = (f'a{k + 1}', f'b{k + 1}')
        else:
            exits = ('t1', 't2')
        edges += [(a, b), (b, a), (a, exits[0]), (b, exits[1])]
    vertices += ['t1', 't2']

    digraph = build_digraph(
        vertices,
        ((k, source, target) for k, (source, target) in enumerate(edges))
    )
    return build_structure(digraph, 2, owner)

# =============================================================================
#                                   CONFIGS
# =============================================================================

RANDOM_GAME_CONFIGS: dict[str, RandomGameConfig] = {
    'desk': RandomGameConfig(
        num_vertices = 8,
        num_players = 2,
        edge_density = 0.25,
        terminal_fraction = 0.25
    ),
    'small': RandomGameConfig(
        num_vertices = 6,
        num_players = 2,
        edge_density = 0.3,
        terminal_fraction = 0.3
    ),
    'three-player': RandomGameConfig(
        num_vertices = 6,
        num_players = 3,
        edge_density = 0.3,
        terminal_fraction = 0.3
    )
}

# =============================================================================
#                                     EOF
# =============================================================================
