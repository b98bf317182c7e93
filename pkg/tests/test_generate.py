import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgms_tools.digraph import condense
from dgms_tools.game import WinLosePartition, build_structure
from dgms_tools.generate import (
    RANDOM_GAME_CONFIGS,
    RandomGameConfig,
    gen_bench_chain,
    gen_household,
    gen_random,
    gen_random_from_config,
)
from dgms_tools.winlose import solve_winlose


def test_household_three():
    structure = gen_household(3)
    assert len(structure.digraph) == 6
    assert len(structure.decomposition) == 4
    assert structure.decomposition.components[-1] == ('v1', 'v2', 'v3')
    assert structure.owner == {'v1': 1, 'v2': 2, 'v3': 3}
    assert all(len(structure.digraph.out_edges[v]) == 2 for v in structure.owner)


def test_household_one():
    structure = gen_household(1)
    assert structure.digraph.loop('v1') is not None
    assert structure.outcome_ids == ('c:v1', 't1')


def test_household_two_condensation_is_a_star():
    structure = gen_household(2)
    quotient = condense(structure.digraph, structure.decomposition).quotient
    centre = structure.decomposition.component_of['v1']
    assert len(quotient.edges) == 2
    assert all(edge.source == centre for edge in quotient.edges)


def test_household_requires_a_player():
    with pytest.raises(ValueError, match='at least one player'):
        gen_household(0)


def test_random_is_deterministic():
    first = gen_random(6, 2, 0.3, 0.3, 42)
    second = gen_random(6, 2, 0.3, 0.3, 42)
    assert first.digraph == second.digraph
    assert first.owner == second.owner


def test_random_terminal_layout():
    structure = gen_random(8, 2, 0.25, 0.25, 7)
    assert [v for v in structure.digraph.vertices if structure.is_terminal(v)] == ['v6', 'v7']


def test_random_rejects_all_terminal():
    with pytest.raises(ValueError, match='leaves no controlled position'):
        gen_random(6, 2, 0.3, 1.0, 0)


@pytest.mark.parametrize(
    'args, message',
    [
        ((0, 2, 0.3, 0.3), 'number of vertices'),
        ((6, 0, 0.3, 0.3), 'number of players'),
        ((6, 2, 1.5, 0.3), 'edge density'),
        ((6, 2, 0.3, -0.1), 'terminal fraction'),
        ((1, 1, 0.3, 0.0), 'single vertex'),
    ],
)
def test_random_rejects_bad_parameters(args, message):
    with pytest.raises(ValueError, match=message):
        gen_random(*args, seed=0)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_desk_preset_is_always_valid(seed):
    structure = gen_random_from_config('desk', seed)
    assert len(structure.digraph) == 8
    assert all(
        any(not edge.is_loop for edge in structure.digraph.out_edges[v])
        for v in structure.owner
    )


def test_random_games_validate_over_a_thousand_seeds():
    for seed in range(1000):
        structure = gen_random(8, 2, 0.25, 0.25, seed)
        rebuilt = build_structure(structure.digraph, 2, structure.owner)
        assert rebuilt.outcome_ids == structure.outcome_ids
        assert [v for v in structure.digraph.vertices if structure.is_terminal(v)] == ['v6', 'v7']
        assert all(
            any(not edge.is_loop for edge in structure.digraph.out_edges[v])
            for v in structure.owner
        )


def test_random_from_explicit_config():
    config = RandomGameConfig(num_vertices=5, num_players=3, edge_density=0.5, terminal_fraction=0.2)
    structure = gen_random_from_config(config, 1)
    assert structure.players == 3
    assert set(structure.owner.values()) <= {1, 2, 3}


def test_unknown_preset():
    with pytest.raises(ValueError, match="'huge' is not a supported preset"):
        gen_random_from_config('huge', 0)
    assert 'desk' in RANDOM_GAME_CONFIGS


def test_bench_chain():
    structure = gen_bench_chain(3)
    assert len(structure.digraph) == 8
    assert len(structure.digraph.edges) == 14
    assert len(structure.decomposition) == 5
    assert structure.outcome_ids == ('c:a0', 'c:a1', 'c:a2', 't1', 't2')

    partition = WinLosePartition.from_winning_set(structure, {'t1'})
    solution = solve_winlose(structure, partition)
    assert solution.steps == 5


def test_bench_chain_requires_a_component():
    with pytest.raises(ValueError, match='at least one component'):
        gen_bench_chain(0)
