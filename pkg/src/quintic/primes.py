"""Rational integer primality and factorization.

Primality: deterministic Miller-Rabin bases below 2^64, seeded Miller-Rabin
rounds plus a strong Lucas test above (the auxiliary elements built for the
norm residue symbol have norms around 10^25..10^31, where this combination
has no known counterexample).  Factorization: trial division by a small
sieve, then Brent-cycle Pollard rho under a wall-clock budget with rho
parameters drawn from a seeded stream, so results are reproducible.
"""

from __future__ import annotations

import random
import time
from math import gcd, isqrt

from .config import get_config
from .errors import FactorBudgetExceeded

_SIEVE_BOUND = 50_000


def _build_sieve(bound: int) -> list[int]:
    sieve = bytearray(b"\x01") * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, bound + 1, p))
    return [i for i in range(2, bound + 1) if sieve[i]]


SMALL_PRIMES = _build_sieve(_SIEVE_BOUND)
_SMALL_SET = set(SMALL_PRIMES)

# deterministic witness set for n < 2^64 (Sorenson-Webster)
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _mr_witness(n: int, a: int) -> bool:
    # True when a witnesses n composite
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x in (1, n - 1):
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's parameter choice."""
    if n % 2 == 0 or _is_square(n):
        return False
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == 0:
            return abs(d) == n
        if j == -1:
            break
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4
    k = n + 1
    s = (k & -k).bit_length() - 1
    t = k >> s
    u, v, qk = 1, p, q % n
    for bit in bin(t)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u & 1:
                u += n
            if v & 1:
                v += n
            u, v = (u >> 1) % n, (v >> 1) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _is_square(n: int) -> bool:
    r = isqrt(n)
    return r * r == n


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n <= _SIEVE_BOUND:
        return n in _SMALL_SET
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 1 << 64:
        return not any(_mr_witness(n, a) for a in _MR_BASES_64)
    rng = random.Random(f"mr:{get_config().seed}:{n}")
    bases = [rng.randrange(2, n - 1) for _ in range(24)]
    if any(_mr_witness(n, a) for a in bases):
        return False
    return _strong_lucas(n)


def _brent_rho(n: int, rng: random.Random, deadline: float | None) -> int | None:
    """One Brent-cycle rho attempt; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            if deadline is not None and time.monotonic() > deadline:
                return None
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r <<= 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            if deadline is not None and time.monotonic() > deadline:
                return None
    return g if g != n else None


def factor_int(n: int, budget_ms: int | None = None) -> dict[int, int]:
    """Full prime factorization of n >= 1 as {prime: exponent}.

    Raises FactorBudgetExceeded when Pollard rho cannot finish inside the
    budget (default from configuration).
    """
    if n < 1:
        raise ValueError("factor_int expects a positive integer")
    if budget_ms is None:
        budget_ms = get_config().rho_budget_ms
    deadline = time.monotonic() + budget_ms / 1000.0
    out: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        rng = random.Random(f"rho:{get_config().seed}:{m}")
        f = None
        while f is None:
            if time.monotonic() > deadline:
                raise FactorBudgetExceeded(m, budget_ms)
            f = _brent_rho(m, rng, deadline)
        stack.append(f)
        stack.append(m // f)
    return out


def next_prime(n: int) -> int:
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k
