import random

import pytest
from hypothesis import settings

from polyinv.parsing import parse_curve, parse_map

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

EXAMPLE2 = "[X + Y^2 + 2*X^2*Y + X^4, Y + X^2] over QQ[X,Y]"
EXAMPLE2_INVERSE = "[X - Y^2, Y - X^2 + 2*X*Y^2 - Y^4] over QQ[X,Y]"
TWO_ADIC = "[x + 2*y + 4*x^2, y + 2*x^2] over ZZ[x,y]"
TWO_ADIC_INVERSE = "[x - 2*y, y - 2*x^2 + 8*x*y - 8*y^2] over ZZ[x,y]"
NON_AUTO = "[x + y^2, y + x^2] over QQ[x,y]"


@pytest.fixture
def example2():
    return parse_map(EXAMPLE2)


@pytest.fixture
def example2_inverse():
    return parse_map(EXAMPLE2_INVERSE)


@pytest.fixture
def two_adic():
    return parse_map(TWO_ADIC)


@pytest.fixture
def non_auto():
    return parse_map(NON_AUTO)


@pytest.fixture
def rng():
    return random.Random(20240611)


def curve(text):
    return parse_curve(text)
