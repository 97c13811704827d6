"""Shared generators and hypothesis strategies for the test suite."""

import hypothesis.strategies as st

from cl12 import Multivector
from cl12.verify import random_invertible, random_multivector, random_singular  # noqa: F401

coefficients = st.integers(min_value=-5, max_value=5)

multivectors = st.builds(Multivector, st.tuples(*[coefficients] * 8))

small_scalars = st.integers(min_value=-4, max_value=4)


def random_nonzero_mixed(rng):
    """Nonzero input, alternating between generic and forced-singular."""
    while True:
        a = random_singular(rng) if rng.randrange(2) else random_multivector(rng)
        if not a.is_zero():
            return a
