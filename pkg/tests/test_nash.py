import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dgms_tools.digraph import build_digraph
from dgms_tools.game import UtilityFunction, build_structure, reachable_outcomes
from dgms_tools.nash import build_nash, check_simple
from dgms_tools.oracle import is_nash

from .strategies import desk_games, utilities


def test_household_equilibrium(household2, nash_utility):
    certificate = build_nash(household2, nash_utility, 'v1')
    assert certificate.equilibrium_outcome.id == 'c:v1'
    assert certificate.solve_count == 3
    assert certificate.profile.moves == {'v1': 0, 'v2': 1}
    assert certificate.simple
    assert [step.action for step in certificate.partition_trace] == [
        'initial',
        'moved to W1',
        'stuck',
    ]
    assert certificate.partition_trace[1].candidate == 't1'
    assert certificate.partition_trace[-1].w1 == {'t1'}
    assert certificate.partition_trace[-1].w == {'c:v1', 't2'}


def test_household_certificate_is_simple(household2, nash_utility):
    certificate = build_nash(household2, nash_utility, 'v1')
    x1 = certificate.profile.strategy(household2, 1)
    x2 = certificate.profile.strategy(household2, 2)
    assert reachable_outcomes(household2, 1, x1, 'v1') == {'c:v1', 't2'}
    assert reachable_outcomes(household2, 2, x2, 'v1') == {'c:v1', 't1'}
    assert check_simple(household2, certificate, 'v1')


def test_corrupted_certificate_is_not_simple(household2, nash_utility):
    certificate = build_nash(household2, nash_utility, 'v1')
    corrupted = dataclasses.replace(
        certificate, profile=certificate.profile.replace({'v1': 2})
    )
    assert not check_simple(household2, corrupted, 'v1')


def test_single_outcome_game():
    digraph = build_digraph(['a', 'b', 't'], [(0, 'a', 'b'), (1, 'a', 't'), (2, 'b', 't')])
    structure = build_structure(digraph, 2, {'a': 1, 'b': 2})
    utility = UtilityFunction.from_payoffs({'t': 3}, {'t': -3})
    certificate = build_nash(structure, utility, 'a')
    assert certificate.equilibrium_outcome.id == 't'
    assert certificate.solve_count <= 2
    assert certificate.simple


def test_build_nash_requires_two_players(household3):
    utility = UtilityFunction.from_payoffs(
        *({a: 0 for a in household3.outcome_ids} for _ in range(3))
    )
    with pytest.raises(ValueError, match='two-person'):
        build_nash(household3, utility, 'v1')


def test_build_nash_rejects_unknown_start(household2, nash_utility):
    with pytest.raises(ValueError, match="'v9' is not a vertex"):
        build_nash(household2, nash_utility, 'v9')


@settings(max_examples=60, deadline=None)
@given(desk_games(max_profiles=2_000), st.data())
def test_certificate_is_a_simple_equilibrium(structure, data):
    utility = data.draw(utilities(structure))
    start = data.draw(st.sampled_from(structure.digraph.vertices))
    certificate = build_nash(structure, utility, start)

    assert certificate.solve_count <= 2 * len(structure.outcome_ids)
    assert certificate.simple
    assert is_nash(structure, start, utility, certificate.profile)


@settings(max_examples=60, deadline=None)
@given(desk_games(max_profiles=2_000), st.data())
def test_punishments_are_realised(structure, data):
    utility = data.draw(utilities(structure))
    start = data.draw(st.sampled_from(structure.digraph.vertices))
    certificate = build_nash(structure, utility, start)
    a_star = certificate.equilibrium_outcome.id

    x1 = certificate.profile.strategy(structure, 1)
    x2 = certificate.profile.strategy(structure, 2)
    for a in reachable_outcomes(structure, 2, x2, start):
        assert utility(1, a) <= utility(1, a_star)
    for a in reachable_outcomes(structure, 1, x1, start):
        assert utility(2, a) <= utility(2, a_star)


@settings(max_examples=60, deadline=None)
@given(desk_games(max_profiles=2_000), st.data())
def test_trace_partitions_outcomes(structure, data):
    utility = data.draw(utilities(structure))
    start = data.draw(st.sampled_from(structure.digraph.vertices))
    certificate = build_nash(structure, utility, start)
    outcomes = set(structure.outcome_ids)

    for step in certificate.partition_trace:
        assert step.w | step.w1 | step.w2 == outcomes
        assert not (step.w & step.w1 or step.w & step.w2 or step.w1 & step.w2)
        for a in step.w:
            assert all(utility(1, b) <= utility(1, a) for b in step.w1)
            assert all(utility(2, b) <= utility(2, a) for b in step.w2)
    assert certificate.equilibrium_outcome.id in certificate.partition_trace[-1].w
