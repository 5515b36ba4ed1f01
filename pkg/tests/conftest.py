import random
from fractions import Fraction

import pytest

from demoivre.construct import make_instance
from demoivre.errors import InvalidInstanceError


def random_instance(rng: random.Random, n_max: int = 31, coef_bound: int = 12):
    """Random valid instance with modest coefficient height."""
    while True:
        n = rng.randrange(3, n_max + 1, 2)
        d = Fraction(rng.randint(-coef_bound, coef_bound), rng.choice((1, 1, 1, 2, 3, 4)))
        r = Fraction(
            rng.randint(-coef_bound * coef_bound, coef_bound * coef_bound),
            rng.choice((1, 1, 2, 4)),
        )
        if d == 0 or r == 0:
            continue
        try:
            return make_instance(n, d, r)
        except InvalidInstanceError:
            continue


@pytest.fixture
def rng():
    return random.Random(0xDE01)
