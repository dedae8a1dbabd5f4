import random

import pytest

from quintic.cyclo import CyclotomicInt, ONE, zeta_power
from quintic.ideals import split_prime

# primes below 50 by splitting behavior in Z[zeta_5]
INERT_PRIMES = (2, 3, 7, 13, 17, 23, 37, 43, 47)
SPLIT1_PRIMES = (11, 31, 41)
SPLIT2_PRIMES = (19, 29)


def poly_mul_mod_phi5(a, b):
    """Independent oracle: multiply coefficient lists and long-divide by
    x^4 + x^3 + x^2 + x + 1 (reduces from the top, never folds x^5 to 1)."""
    prod = [0] * 7
    for i in range(4):
        for j in range(4):
            prod[i + j] += a[i] * b[j]
    for k in range(6, 3, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(4):
                prod[k - 4 + i] -= c
    return tuple(prod[:4])


def poly_norm(a):
    """Norm via the oracle multiplication over all four conjugates."""
    conj = []
    for r in (1, 2, 3, 4):
        e = [0] * 5
        for k in range(4):
            e[(r * k) % 5] += a[k]
        conj.append(tuple(x - e[4] for x in e[:4]))
    acc = (1, 0, 0, 0)
    for c in conj:
        acc = poly_mul_mod_phi5(acc, c)
    assert acc[1] == acc[2] == acc[3] == 0
    return acc[0]


def random_cyclo(rng, bound=20):
    return CyclotomicInt(*(rng.randint(-bound, bound) for _ in range(4)))


def random_unit(rng):
    return (
        (-1) ** rng.randint(0, 1)
        * zeta_power(rng.randint(0, 4))
        * (ONE + zeta_power(1)) ** rng.randint(0, 4)
    )


def smooth_element(rng, primes, max_exp=2, with_unit=True):
    """A nonzero element supported on generators of primes over the given
    rational primes, with small exponents."""
    out = random_unit(rng) if with_unit else ONE
    for p in primes:
        for P in split_prime(p):
            e = rng.randint(0, max_exp)
            if e:
                out = out * P.generator**e
    return out


@pytest.fixture
def rng():
    return random.Random(20260810)
