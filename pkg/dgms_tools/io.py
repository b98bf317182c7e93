#!/usr/bin/env python3

# =============================================================================
#                               LIBRARY IMPORTS
# =============================================================================

from __future__ import annotations

import re
import pandas as pd
from fractions import Fraction
from typing import Iterator

from .constants import PLAYER_LABELS
from .digraph import build_digraph
from .game import (
    PositionalStructure,
    StrategyProfile,
    UtilityFunction,
    build_structure,
    trace_play,
    validate_profile
)
from .nash import NashCertificate
from .winlose import WinLoseSolution
from .zerosum import ZeroSumSolution

# =============================================================================
#                                   CLASSES
# =============================================================================

class GameFormatError(ValueError):
    """
    Raised when a game, utility or profile document cannot be parsed; carries
    the (1-based) line and column of the offending token.
    """

    def __init__(
        self,
        message: str,
        line: int,
        column: int
    ):

        super().__init__(f'line {line}, column {column}: {message}')
        self.line = line
        self.column = column

# =============================================================================
#                                  CONSTANTS
# =============================================================================

RESULT_HEADER: str = '--- result ---'
RESULT_FOOTER: str = '--- end ---'

_TOKEN = re.compile(r'\S+')
_RATIONAL = re.compile(r'-?\d+(?:/\d+)?')

# =============================================================================
#                                  FUNCTIONS
# =============================================================================

def _iter_lines(
    text: str
) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    """
    Yields (line number, [(column, token), ...]) for every line of the text
    that holds at least one token once '#' comments are stripped.
    """

    for line_no, line in enumerate(text.splitlines(), start = 1):
        content = line.split('#', 1)[0]
        tokens = [
            (match.start() + 1, match.group())
            for match in _TOKEN.finditer(content)
        ]
        if tokens:
            yield line_no, tokens

def _keyed(
    token: tuple[int, str],
    key: str,
    line_no: int
) -> str:

    column, text = token
    prefix = f'{key}='
    if not text.startswith(prefix) or text == prefix:
        raise GameFormatError(
            f'expected \'{prefix}<value>\'; got \'{text}\'', line_no, column
        )
    return text[len(prefix):]

def _expect_arity(
    tokens: list[tuple[int, str]],
    arity: int,
    usage: str,
    line_no: int
) -> None:

    if len(tokens) != arity:
        column = tokens[min(len(tokens), arity) - 1][0]
        raise GameFormatError(
            f'expected \'{usage}\'', line_no, column
        )

def parse_game(
    text: str
) -> PositionalStructure:
    """
    Parses a game document into a validated positional structure.

    The document is line-oriented with '#' comments: a leading
    `players <n>` directive, then `node <id> player=<i>` or
    `node <id> terminal` lines and `edge <src> <dst>` lines (repeatable;
    `edge x x` declares the vertex's loop). Vertex ids are case-sensitive and
    may not contain ':'. Edge ids are assigned in file order.

    Args:
        text (str): Game document.

    Returns:
        PositionalStructure: Positional structure (terminal loops added where
        missing).

    Raises:
        GameFormatError: If the document has a syntax error;
        GameFormatError: If a node is declared twice, an edge references an
            undeclared node, a node's owner is out of range, a terminal node
            has a non-loop edge, or a controlled node has no non-loop edge;
        ValueError: If the structure fails validation.
    """

    players = None
    nodes: dict[str, tuple[int, int, int | None]] = {}
    edges: list[tuple[int, int, str, str]] = []

    for line_no, tokens in _iter_lines(text):
        column, directive = tokens[0]
        if players is None and directive != 'players':
            raise GameFormatError(
                'the \'players\' directive must come first', line_no, column
            )
        if directive == 'players':
            _expect_arity(tokens, 2, 'players <n>', line_no)
            if players is not None:
                raise GameFormatError(
                    'duplicate \'players\' directive', line_no, column
                )
            count_column, count = tokens[1]
            if not count.isdigit() or int(count) < 1:
                raise GameFormatError(
                    f'the number of players must be a positive integer; got '
                    f'\'{count}\'',
                    line_no,
                    count_column
                )
            players = int(count)
        elif directive == 'node':
            _expect_arity(
                tokens, 3, 'node <id> player=<i> | node <id> terminal', line_no
            )
            id_column, v = tokens[1]
            if ':' in v:
                raise GameFormatError(
                    f'node ids may not contain \':\'; got \'{v}\'',
                    line_no,
                    id_column
                )
            if v in nodes:
                raise GameFormatError(
                    f'node \'{v}\' is declared twice', line_no, id_column
                )
            role_column, role = tokens[2]
            if role == 'terminal':
                owner = None
            else:
                owner_text = _keyed(tokens[2], 'player', line_no)
                if not (
                    owner_text.isdigit() and 1 <= int(owner_text) <= players
                ):
                    raise GameFormatError(
                        f'node \'{v}\' is owned by player \'{owner_text}\'; '
                        f'players are numbered 1..{players}',
                        line_no,
                        role_column
                    )
                owner = int(owner_text)
            nodes[v] = (line_no, id_column, owner)
        elif directive == 'edge':
            _expect_arity(tokens, 3, 'edge <src> <dst>', line_no)
            edges.append((line_no, tokens[1][0], tokens[1][1], tokens[2][1]))
        else:
            raise GameFormatError(
                f'unknown directive \'{directive}\'; directives are '
                f'{{players, node, edge}}',
                line_no,
                column
            )

    if players is None:
        raise GameFormatError(
            'players directive required', 1, 1
        )

    exits = {v: 0 for v in nodes}
    looped = set()
    for line_no, column, source, target in edges:
        for endpoint in (source, target):
            if endpoint not in nodes:
                raise GameFormatError(
                    f'edge {source} -> {target} references the undeclared '
                    f'node \'{endpoint}\'',
                    line_no,
                    column
                )
        if source == target:
            if source in looped:
                raise GameFormatError(
                    f'node \'{source}\' already carries a loop', line_no, column
                )
            looped.add(source)
            continue
        if nodes[source][2] is None:
            raise GameFormatError(
                f'terminal node \'{source}\' has an outgoing edge to '
                f'\'{target}\'',
                line_no,
                column
            )
        exits[source] += 1

    for v, (line_no, column, owner) in nodes.items():
        if owner is not None and not exits[v]:
            raise GameFormatError(
                f'node \'{v}\' is controlled by player {owner} but has no move '
                f'to another node',
                line_no,
                column
            )

    digraph = build_digraph(
        nodes,
        (
            (edge_id, source, target)
            for edge_id, (_, _, source, target) in enumerate(edges)
        )
    )
    return build_structure(
        digraph,
        players,
        {v: owner for v, (_, _, owner) in nodes.items() if owner is not None}
    )

def render_game(
    structure: PositionalStructure
) -> str:
    """
    Renders a positional structure as a game document; terminal loops are
    implicit and are not written.
    """

    digraph = structure.digraph
    lines = [f'players {structure.players}']
    for v in digraph.vertices:
        if structure.is_terminal(v):
            lines.append(f'node {v} terminal')
        else:
            lines.append(f'node {v} player={structure.owner[v]}')
    for edge in digraph.edges:
        if edge.id not in digraph.terminal_loops:
            lines.append(f'edge {edge.source} {edge.target}')
    return '\n'.join(lines) + '\n'

def parse_rational(
    text: str
) -> Fraction:
    """
    Parses an exact rational written as an integer or as `<p>/<q>`.

    Raises:
        ValueError: If the text is not an integer or integer ratio (decimal
            input is rejected), or if the denominator is zero.
    """

    if not _RATIONAL.fullmatch(text):
        raise ValueError(
            f'\'{text}\' is not an exact rational; write an integer or '
            f'\'<p>/<q>\''
        )
    numerator, _, denominator = text.partition('/')
    if denominator and int(denominator) == 0:
        raise ValueError(
            f'\'{text}\' has a zero denominator'
        )
    return Fraction(int(numerator), int(denominator or 1))

def parse_utilities(
    text: str,
    structure: PositionalStructure
) -> UtilityFunction:
    """
    Parses a utility document of
    `utility player=<i> outcome=<outcome-id> value=<p>/<q>` lines against the
    outcomes of the supplied structure.

    Args:
        text (str): Utility document.
        structure (PositionalStructure): Positional structure.

    Returns:
        UtilityFunction: Utility function, total over players and outcomes.

    Raises:
        GameFormatError: If a line is malformed, names an unknown player or
            outcome, repeats a (player, outcome) pair, or has a non-rational
            value;
        ValueError: If a (player, outcome) pair has no value.
    """

    values: dict[tuple[int, str], Fraction] = {}
    for line_no, tokens in _iter_lines(text):
        column, directive = tokens[0]
        if directive != 'utility':
            raise GameFormatError(
                f'unknown directive \'{directive}\'; expected \'utility\'',
                line_no,
                column
            )
        _expect_arity(
            tokens,
            4,
            'utility player=<i> outcome=<outcome-id> value=<p>/<q>',
            line_no
        )
        player_text = _keyed(tokens[1], 'player', line_no)
        if not player_text.isdigit() or not (
            1 <= int(player_text) <= structure.players
        ):
            raise GameFormatError(
                f'unknown player \'{player_text}\'; players are numbered '
                f'1..{structure.players}',
                line_no,
                tokens[1][0]
            )
        outcome_id = _keyed(tokens[2], 'outcome', line_no)
        try:
            structure.outcome(outcome_id)
        except ValueError as e:
            raise GameFormatError(str(e), line_no, tokens[2][0]) from None
        value_text = _keyed(tokens[3], 'value', line_no)
        try:
            value = parse_rational(value_text)
        except ValueError as e:
            raise GameFormatError(str(e), line_no, tokens[3][0]) from None
        key = (int(player_text), outcome_id)
        if key in values:
            raise GameFormatError(
                f'duplicate utility for player {key[0]} at \'{outcome_id}\'',
                line_no,
                column
            )
        values[key] = value

    utility = UtilityFunction(values = values)
    utility.validate(structure)
    return utility

def render_utilities(
    utility: UtilityFunction
) -> str:

    return ''.join(
        f'utility player={player} outcome={outcome_id} value={value}\n'
        for (player, outcome_id), value in sorted(utility.values.items())
    )

def parse_profile(
    text: str,
    structure: PositionalStructure
) -> StrategyProfile:
    """
    Parses a strategy profile written as `<vertex> -> <target>` lines, one per
    non-terminal vertex; with parallel edges, the first edge to the target is
    chosen.

    Args:
        text (str): Profile document.
        structure (PositionalStructure): Positional structure.

    Returns:
        StrategyProfile: Total strategy profile.

    Raises:
        GameFormatError: If a line is malformed, names an unknown or terminal
            vertex, repeats a vertex, or names a target without an edge;
        ValueError: If a non-terminal vertex has no move.
    """

    digraph = structure.digraph
    moves: dict[str, int] = {}
    for line_no, tokens in _iter_lines(text):
        if len(tokens) != 3 or tokens[1][1] != '->':
            raise GameFormatError(
                'expected \'<vertex> -> <target>\'', line_no, tokens[0][0]
            )
        (column, v), _, (target_column, target) = tokens
        if v not in structure.owner:
            raise GameFormatError(
                f'\'{v}\' is not a controlled position', line_no, column
            )
        if v in moves:
            raise GameFormatError(
                f'duplicate move at \'{v}\'', line_no, column
            )
        edge = next(
            (e for e in digraph.out_edges[v] if e.target == target), None
        )
        if edge is None:
            raise GameFormatError(
                f'there is no edge {v} -> {target}', line_no, target_column
            )
        moves[v] = edge.id

    profile = StrategyProfile(moves = moves)
    validate_profile(structure, profile)
    return profile

def render_profile(
    structure: PositionalStructure,
    profile: StrategyProfile
) -> str:

    return ''.join(f'{line}\n' for line in _move_lines(structure, profile))

def _move_lines(
    structure: PositionalStructure,
    profile: StrategyProfile
) -> list[str]:

    edge_by_id = structure.digraph.edge_by_id
    return [
        f'{v} -> {edge_by_id[profile.moves[v]].target}'
        for v in structure.digraph.vertices
        if v in profile.moves
    ]

def _move_target(
    structure: PositionalStructure,
    profile: StrategyProfile,
    v: str
) -> str:

    if v not in profile.moves:
        return '-'
    return str(structure.digraph.edge_by_id[profile.moves[v]].target)

def _owner_label(
    structure: PositionalStructure,
    v: str,
    labels: dict[int, str] | None = None
) -> str:

    if structure.is_terminal(v):
        return 'terminal'
    owner = structure.owner[v]
    return labels[owner] if labels else str(owner)

def _result_block(
    lines: list[str]
) -> str:

    return '\n'.join([RESULT_HEADER, *lines, RESULT_FOOTER]) + '\n'

def render_winlose(
    structure: PositionalStructure,
    solution: WinLoseSolution,
    start: str | None = None
) -> str:
    """
    Renders a win/lose solution as a human-readable table followed by the
    machine-readable block (`winner(v)=i` per vertex, then the strategy as
    `v -> target` lines, then `outcome(v0)=a` when a start vertex is given).
    """

    table = pd.DataFrame({
        'vertex': list(structure.digraph.vertices),
        'owner': [
            _owner_label(structure, v) for v in structure.digraph.vertices
        ],
        'winner': [solution.winner[v] for v in structure.digraph.vertices],
        'move': [
            _move_target(structure, solution.profile, v)
            for v in structure.digraph.vertices
        ],
        'layer': [
            '-' if solution.layer[v] is None else solution.layer[v]
            for v in structure.digraph.vertices
        ]
    })

    lines = [
        f'winner({v})={solution.winner[v]}'
        for v in structure.digraph.vertices
    ]
    lines += _move_lines(structure, solution.profile)
    if start is not None:
        outcome = trace_play(structure, solution.profile, start).outcome
        lines.append(f'outcome({start})={outcome.id}')

    return table.to_string(index = False) + '\n' + _result_block(lines)

def render_zerosum(
    structure: PositionalStructure,
    solution: ZeroSumSolution,
    start: str | None = None
) -> str:
    """
    Renders a zero-sum solution as a human-readable table followed by the
    machine-readable block (`value(v)=p/q` per vertex, the strategy lines,
    and `outcome(v0)=a` when a start vertex is given).
    """

    vertices = structure.digraph.vertices
    table = pd.DataFrame({
        'vertex': list(vertices),
        'owner': [
            _owner_label(structure, v, PLAYER_LABELS) for v in vertices
        ],
        'value': [str(solution.value[v]) for v in vertices],
        'move': [
            _move_target(structure, solution.profile, v) for v in vertices
        ],
        'outcome': [solution.outcome_at[v] for v in vertices]
    })

    lines = [f'value({v})={solution.value[v]}' for v in vertices]
    lines += _move_lines(structure, solution.profile)
    if start is not None:
        lines.append(f'outcome({start})={solution.outcome_at[start]}')

    return table.to_string(index = False) + '\n' + _result_block(lines)

def _format_set(
    outcome_ids: frozenset[str]
) -> str:

    return f'{{{",".join(sorted(outcome_ids))}}}'

def render_nash(
    structure: PositionalStructure,
    certificate: NashCertificate,
    start: str
) -> str:
    """
    Renders a Nash certificate: the partition trace as a table, then the
    machine-readable block with the equilibrium outcome, the solve count, the
    simple flag, the trace and the profile.
    """

    trace = pd.DataFrame([
        {
            'step': k,
            'action': step.action,
            'a*': step.candidate or '-',
            'W': _format_set(step.w),
            'W1': _format_set(step.w1),
            'W2': _format_set(step.w2)
        }
        for k, step in enumerate(certificate.partition_trace)
    ])

    lines = [
        f'outcome({start})={certificate.equilibrium_outcome.id}',
        f'solve_count={certificate.solve_count}',
        f'simple={str(certificate.simple).lower()}'
    ]
    lines += [
        f'trace({k})={step.action} a*={step.candidate or "-"} '
        f'W={_format_set(step.w)} W1={_format_set(step.w1)} '
        f'W2={_format_set(step.w2)}'
        for k, step in enumerate(certificate.partition_trace)
    ]
    lines += _move_lines(structure, certificate.profile)

    return trace.to_string(index = False) + '\n' + _result_block(lines)

# =============================================================================
#                                     EOF
# =============================================================================
