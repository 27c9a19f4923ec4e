import random

import pytest

from maxsymbreak import random_formula

from helpers import example_ms, example_wpms


@pytest.fixture
def ex_ms():
    return example_ms()


@pytest.fixture
def ex_wpms():
    return example_wpms()


def make_random_suite(count: int, seed: int = 20080613):
    """Seeded random instances covering all four problem variants.

    Bounded at 12 variables / 30 clauses so the exhaustive oracle stays
    cheap even after SBP auxiliaries are added.
    """
    rng = random.Random(seed)
    suite = []
    for i in range(count):
        variant = ("ms", "pms", "wms", "wpms")[i % 4]
        nv = rng.randint(2, 12)
        nc = rng.randint(max(1, nv - 4), 30)
        max_weight = 1 if variant in ("ms", "pms") else rng.randint(2, 10)
        hard_fraction = 0.0 if variant in ("ms", "wms") else 0.1 + 0.4 * rng.random()
        suite.append(
            random_formula(
                nv,
                nc,
                max_weight=max_weight,
                hard_fraction=hard_fraction,
                seed=rng.randint(0, 2**31),
            )
        )
    return suite


@pytest.fixture(scope="session")
def random_suite():
    """The 500-instance suite shared by the acceptance criteria."""
    return make_random_suite(500)
