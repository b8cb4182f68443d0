import math

import pytest

from gibonacci.sequences import Seed


def naive_fib(n: int) -> int:
    """Iterative Fibonacci oracle, both directions, no doubling tricks."""
    a, b = 0, 1
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def naive_gib_terms(seed: Seed, lo: int, hi: int) -> dict[int, int]:
    """G_n for n in [lo, hi] by running the recurrence both ways from (G_0, G_1)."""
    terms = {0: seed.g0, 1: seed.g1}
    for n in range(2, hi + 1):
        terms[n] = terms[n - 1] + terms[n - 2]
    for n in range(-1, lo - 1, -1):
        terms[n] = terms[n + 2] - terms[n + 1]
    return {n: v for n, v in terms.items() if lo <= n <= hi}


@pytest.fixture(scope="session")
def grid25():
    from gibonacci.sequences import SMALL_SEED_GRID

    assert len(SMALL_SEED_GRID) == 25
    assert all(math.gcd(s.g0, s.g1) == 1 for s in SMALL_SEED_GRID)
    return SMALL_SEED_GRID
