from fractions import Fraction

import pytest

from dgms_tools.game import UtilityFunction
from dgms_tools.generate import gen_household
from dgms_tools.io import parse_game

HOUSEHOLD_2 = """\
# two-player household game
players 2
node v1 player=1
node v2 player=2
node t1 terminal
node t2 terminal
edge v1 v2
edge v2 v1
edge v1 t1
edge v2 t2
"""

HOUSEHOLD_2_NASH_UTILITIES = """\
utility player=1 outcome=c:v1 value=0
utility player=1 outcome=t1 value=-1
utility player=1 outcome=t2 value=2
utility player=2 outcome=c:v1 value=0
utility player=2 outcome=t1 value=2
utility player=2 outcome=t2 value=-1
"""

HOUSEHOLD_2_ZERO_SUM_UTILITIES = """\
utility player=1 outcome=c:v1 value=1/2
utility player=1 outcome=t1 value=0
utility player=1 outcome=t2 value=1
utility player=2 outcome=c:v1 value=1/2
utility player=2 outcome=t1 value=1
utility player=2 outcome=t2 value=0
"""


@pytest.fixture
def household2():
    return gen_household(2)


@pytest.fixture
def household3():
    return gen_household(3)


@pytest.fixture
def household2_doc():
    return HOUSEHOLD_2


@pytest.fixture
def parsed_household2():
    return parse_game(HOUSEHOLD_2)


@pytest.fixture
def nash_utility():
    return UtilityFunction.from_payoffs(
        {'c:v1': 0, 't1': -1, 't2': 2},
        {'c:v1': 0, 't1': 2, 't2': -1},
    )


@pytest.fixture
def zero_sum_utility():
    return UtilityFunction.zero_sum({'c:v1': Fraction(1, 2), 't1': 0, 't2': 1})
