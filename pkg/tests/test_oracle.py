import logging
from fractions import Fraction

import pytest
from hypothesis import given, settings

import dgms_tools.oracle as oracle

from dgms_tools.errors import ContractViolationError
from dgms_tools.game import (
    NormalFormTable,
    StrategyProfile,
    UtilityFunction,
    WinLosePartition,
    expand_game_form,
    profile_count,
)
from dgms_tools.oracle import (
    brute_force_value,
    brute_force_values,
    brute_force_winners,
    check_solvability,
    find_nash,
    is_nash,
    is_subgame_perfect,
    iter_profiles,
    strategy_wins,
)
from dgms_tools.winlose import solve_winlose

from .strategies import desk_games

NE_PROFILE = StrategyProfile(moves={'v1': 0, 'v2': 1})
EXIT_PROFILE = StrategyProfile(moves={'v1': 2, 'v2': 3})


def test_iter_profiles_order(household2):
    profiles = [p.moves for p in iter_profiles(household2)]
    assert profiles == [
        {'v1': 0, 'v2': 1},
        {'v1': 0, 'v2': 3},
        {'v1': 2, 'v2': 1},
        {'v1': 2, 'v2': 3},
    ]


def test_iter_profiles_cap(household3):
    with pytest.raises(ValueError, match='enumeration cap is 4'):
        list(iter_profiles(household3, max_profiles=4))


def test_is_nash_household(household2, nash_utility):
    assert is_nash(household2, 'v1', nash_utility, NE_PROFILE)
    assert not is_nash(household2, 'v1', nash_utility, EXIT_PROFILE)


def test_constant_utilities_make_every_profile_an_equilibrium(household3):
    utility = UtilityFunction.from_payoffs(
        *({a: 7 for a in household3.outcome_ids} for _ in range(3))
    )
    for profile in iter_profiles(household3):
        assert is_nash(household3, 'v2', utility, profile)
        assert is_subgame_perfect(household3, utility, profile)


def test_is_nash_rejects_partial_profile(household2, nash_utility):
    with pytest.raises(ValueError, match="no move at 'v2'"):
        is_nash(household2, 'v1', nash_utility, StrategyProfile(moves={'v1': 0}))


def test_winlose_profile_is_subgame_perfect(household2):
    partition = WinLosePartition.from_winning_set(household2, {'t1'})
    solution = solve_winlose(household2, partition)
    utility = UtilityFunction.zero_sum({'c:v1': -1, 't1': 1, 't2': -1}, total=0)
    assert is_subgame_perfect(household2, utility, solution.profile)


def test_household_without_subgame_perfect_equilibrium(household2):
    utility = UtilityFunction.from_payoffs(
        {'t2': 2, 't1': 1, 'c:v1': 0},
        {'c:v1': 2, 't2': 1, 't1': 0},
    )
    assert find_nash(household2, 'v1', utility, subgame_perfect=True) is None
    assert find_nash(household2, 'v1', utility) is not None


def test_brute_force_value_household(household2, zero_sum_utility):
    assert brute_force_value(household2, 'v1', zero_sum_utility) == Fraction(1, 2)
    assert brute_force_value(household2, 't2', zero_sum_utility) == 1


def test_brute_force_value_of_constant_utility(household2):
    utility = UtilityFunction.zero_sum({a: 4 for a in household2.outcome_ids})
    assert set(brute_force_values(household2, utility).values()) == {4}


def test_brute_force_value_rejects_general_sum(household2, nash_utility):
    with pytest.raises(ValueError, match='not zero-sum'):
        brute_force_value(household2, 'v1', nash_utility)


def test_brute_force_values_require_two_players(household3):
    utility = UtilityFunction.from_payoffs(
        *(
            {a: k * i for k, a in enumerate(household3.outcome_ids)}
            for i in range(1, 4)
        )
    )
    with pytest.raises(ValueError, match='two-person'):
        brute_force_values(household3, utility)


def test_brute_force_winners(household2):
    partition = WinLosePartition.from_winning_set(household2, {'t1'})
    assert brute_force_winners(household2, partition) == {
        'v1': 1, 'v2': 2, 't1': 1, 't2': 2,
    }


def test_strategy_wins(household2):
    assert strategy_wins(household2, 1, {'v1': 2}, 'v1', {'t1'})
    assert not strategy_wins(household2, 1, {'v1': 0}, 'v1', {'t1'})


def test_matching_pennies_is_not_solvable(caplog):
    table = NormalFormTable.from_outcomes([['a', 'b'], ['b', 'a']])
    with caplog.at_level(logging.WARNING):
        report = check_solvability(table)
    assert not report.winlose_solvable
    assert not report.zerosum_solvable_sampled
    assert not report.nash_solvable_sampled
    assert report.saddle_free_partition == {'a'}
    assert report.agrees
    assert not caplog.records


def test_one_cell_table_is_solvable():
    report = check_solvability(NormalFormTable.from_outcomes([['a']]))
    assert report.winlose_solvable
    assert report.zerosum_solvable_sampled
    assert report.nash_solvable_sampled
    assert report.saddle_free_partition is None


def test_household_game_form_is_solvable(household2):
    report = check_solvability(expand_game_form(household2, 'v1'))
    assert report.winlose_solvable and report.agrees
    assert report.samples == 6


def test_check_solvability_outcome_cap():
    table = NormalFormTable.from_outcomes([['a', 'b', 'c']])
    with pytest.raises(ValueError, match='has 3 outcomes'):
        check_solvability(table, max_outcomes=2)


def test_check_solvability_samples_large_outcome_sets():
    table = NormalFormTable.from_outcomes([[str(k) for k in range(8)]])
    report = check_solvability(table, samples=25, seed=3)
    assert report.samples == 25
    assert report.winlose_solvable and report.agrees


@settings(max_examples=30, deadline=None)
@given(desk_games(max_profiles=500))
def test_enumeration_count(structure):
    assert sum(1 for _ in iter_profiles(structure)) == profile_count(structure)


def test_brute_force_values_detect_missing_saddle(monkeypatch, household2, zero_sum_utility):
    def mismatched(structure, max_profiles):
        vertices = ['v1']
        return vertices, [[{'v1': 't1'}, {'v1': 't2'}], [{'v1': 't2'}, {'v1': 't1'}]]

    monkeypatch.setattr(oracle, '_outcome_tensor', mismatched)
    with pytest.raises(ContractViolationError, match="from 'v1'"):
        oracle.brute_force_values(household2, zero_sum_utility)
