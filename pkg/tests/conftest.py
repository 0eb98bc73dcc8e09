import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from singfol import FoliationModule, Polynomial, PolyVectorField
from singfol.fixtures import FIXTURE_NAMES, load_fixture

settings.register_profile(
    "exact",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


INVOLUTIVE_FIXTURES = tuple(n for n in FIXTURE_NAMES if n != "non-involutive-pair")


@pytest.fixture(scope="session")
def fixture_modules():
    return {name: FoliationModule(load_fixture(name).generators)
            for name in FIXTURE_NAMES}


def random_polynomial(rng: random.Random, nvars: int, max_degree: int,
                      max_terms: int = 3, min_order: int = 0) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        while True:
            expt = tuple(rng.randint(0, max_degree) for _ in range(nvars))
            if min_order <= sum(expt) <= max_degree:
                break
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if coeff:
            terms[expt] = terms.get(expt, Fraction(0)) + coeff
    return Polynomial(nvars, terms)


def random_field(rng: random.Random, nvars: int, max_degree: int,
                 min_order: int = 0) -> PolyVectorField:
    return PolyVectorField([
        random_polynomial(rng, nvars, max_degree, min_order=min_order)
        for _ in range(nvars)
    ])
