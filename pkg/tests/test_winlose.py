import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgms_tools.digraph import build_digraph
from dgms_tools.game import WinLosePartition, build_structure, dg_project
from dgms_tools.oracle import brute_force_winners, strategy_wins
from dgms_tools.winlose import (
    WorkingGame,
    attractor,
    eliminate_component,
    solve_component,
    solve_winlose,
)

from .strategies import desk_games, partitions


def test_attractor_for_player_2(household2):
    result = attractor(household2, ('v1', 'v2'), {'t2'}, 2)
    assert result.vertices == {'t2', 'v2'}
    assert result.layer == {'t2': 0, 'v2': 1}
    assert result.strategy == {'v2': 3}


def test_attractor_needs_every_opponent_move(household2):
    result = attractor(household2, ('v1', 'v2'), {'t1', 't2'}, 2)
    assert result.layer == {'t1': 0, 't2': 0, 'v2': 1, 'v1': 2}


def test_attractor_of_empty_target(household2):
    assert attractor(household2, ('v1', 'v2'), set(), 1).vertices == frozenset()


def test_solve_winlose_exit_win(household2):
    partition = WinLosePartition.from_winning_set(household2, {'t1'})
    solution = solve_winlose(household2, partition)
    assert solution.winner == {'v1': 1, 'v2': 2, 't1': 1, 't2': 2}
    assert solution.profile.moves == {'v1': 2, 'v2': 3}
    assert solution.layer['v1'] == 1
    assert solution.region(1) == {'v1', 't1'}
    assert solution.steps == 3


def test_solve_winlose_cycle_lost(household2):
    partition = WinLosePartition.from_winning_set(household2, {'c:v1'})
    solution = solve_winlose(household2, partition)
    assert solution.winner['v1'] == 2
    assert solution.winner['v2'] == 2


def test_solve_winlose_cycle_kept(household2):
    partition = WinLosePartition.from_winning_set(household2, {'c:v1', 't2'})
    solution = solve_winlose(household2, partition)
    assert solution.winner['v1'] == 1
    assert solution.winner['v2'] == 1
    assert solution.profile.moves['v1'] == 0


def test_solve_winlose_requires_two_players(household3):
    partition = WinLosePartition.from_winning_set(household3, set())
    with pytest.raises(ValueError, match='two-person'):
        solve_winlose(household3, partition)


def test_solve_winlose_rejects_overlapping_partition(household2):
    partition = WinLosePartition(a1=frozenset({'t1'}), a2=frozenset({'t1', 't2', 'c:v1'}))
    with pytest.raises(ValueError, match='winning for both players'):
        solve_winlose(household2, partition)


def test_sink_component_is_won_wholesale():
    digraph = build_digraph(['a', 'b', 'x'], [(0, 'a', 'b'), (1, 'b', 'a'), (2, 'x', 'a')])
    structure = build_structure(digraph, 2, {'a': 1, 'b': 2, 'x': 1})
    partition = WinLosePartition.from_winning_set(structure, {'c:a'})
    solution = solve_winlose(structure, partition)
    assert set(solution.winner.values()) == {1}


def test_loop_free_component_favours_attractor_of_player_1():
    digraph = build_digraph(['x', 't1', 't2'], [(0, 'x', 't1'), (1, 'x', 't2')])
    structure = build_structure(digraph, 2, {'x': 2})
    result = solve_component(structure, ('x',), {'t1': 1, 't2': 2}, None)
    assert result.winner == {'x': 2}
    assert result.strategy == {'x': 1}


def test_solve_component_rejects_unlabelled_exit(household2):
    with pytest.raises(ValueError, match="unsolved vertex 't2'"):
        solve_component(household2, ('v1', 'v2'), {'t1': 1}, 2)


def test_eliminate_component_checks_order(household2):
    working = WorkingGame(household2)
    with pytest.raises(ValueError, match="exit to 't1'"):
        eliminate_component(working, 2, {'v1': 1, 'v2': 1})
    eliminate_component(working, 0, {'t2': 2})
    with pytest.raises(ValueError, match='already been eliminated'):
        eliminate_component(working, 0, {'t2': 2})
    with pytest.raises(ValueError, match="no label for 't1'"):
        eliminate_component(working, 1, {})


def test_working_game_counts_open_cycles(household2):
    working = WorkingGame(household2)
    assert working.open_cyclic_count() == 1
    assert working.exits(2) == ['t1', 't2']
    eliminate_component(working, 0, {'t2': 2})
    eliminate_component(working, 1, {'t1': 1})
    eliminate_component(working, 2, {'v1': 1, 'v2': 2})
    assert working.open_cyclic_count() == 0
    assert working.steps == 3


@settings(max_examples=60, deadline=None)
@given(desk_games(), st.data())
def test_winners_match_brute_force(structure, data):
    partition = data.draw(partitions(structure))
    solution = solve_winlose(structure, partition)
    assert solution.winner == brute_force_winners(structure, partition)


@settings(max_examples=60, deadline=None)
@given(desk_games(), st.data())
def test_profile_is_subgame_perfect(structure, data):
    partition = data.draw(partitions(structure))
    solution = solve_winlose(structure, partition)
    for v, winner in solution.winner.items():
        winning = partition.a1 if winner == 1 else partition.a2
        strategy = solution.profile.strategy(structure, winner)
        assert strategy_wins(structure, winner, strategy, v, winning)


@settings(max_examples=60, deadline=None)
@given(desk_games())
def test_step_count(structure):
    partition = WinLosePartition.from_winning_set(structure, set())
    solution = solve_winlose(structure, partition)
    decomposition = structure.decomposition
    assert solution.steps == len(decomposition) - len(decomposition.j_zero)


@settings(max_examples=40, deadline=None)
@given(desk_games(), st.data())
def test_dg_projection_keeps_winners(structure, data):
    projected, merge = dg_project(structure)
    partition = data.draw(partitions(projected))
    original = solve_winlose(structure, partition.pull_back(merge))
    assert solve_winlose(projected, partition).winner == original.winner


@settings(max_examples=100, deadline=None)
@given(desk_games(), st.data())
def test_larger_winning_set_never_shrinks_region(structure, data):
    a1 = data.draw(st.sets(st.sampled_from(structure.outcome_ids)))
    extra = data.draw(st.sets(st.sampled_from(structure.outcome_ids)))
    smaller = solve_winlose(structure, WinLosePartition.from_winning_set(structure, a1))
    larger = solve_winlose(structure, WinLosePartition.from_winning_set(structure, a1 | extra))
    assert smaller.region(1) <= larger.region(1)


@settings(max_examples=100, deadline=None)
@given(desk_games(), st.data())
def test_attractor_is_least_closed_set(structure, data):
    player = data.draw(st.sampled_from([1, 2]))
    targets = data.draw(st.sets(st.sampled_from(structure.digraph.vertices)))
    component = tuple(structure.owner)
    result = attractor(structure, component, targets, player)
    layer = result.layer
    assert set(targets) <= result.vertices
    for v in component:
        if v in targets:
            continue
        successors = [edge.target for edge in structure.digraph.out_edges[v]]
        owned = structure.owner[v] == player
        if v not in layer:
            if owned:
                assert not any(w in layer for w in successors)
            else:
                assert not all(w in layer for w in successors)
        elif owned:
            edge = structure.digraph.edge_by_id[result.strategy[v]]
            assert edge.source == v
            assert layer[edge.target] < layer[v]
        else:
            assert all(layer[w] < layer[v] for w in successors)
