"""Independent brute-force verifiers for the fast symbol paths.

brute_quintic_table enumerates every fifth power of a small residue field so
membership can be compared against the symbol exponent.  For fields too large
to enumerate, FieldDlog computes full discrete logarithms by baby-step
giant-step matching (no fifth-power shortcut anywhere in that path), so the
symbol can be checked on sampled elements.  relative_norm expands products of
conjugates over the degree-5 radical extension symbolically with exact
coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclo import CyclotomicInt
from .errors import InvalidInput
from .ideals import PrimeIdeal, PrimeKind, seeded_rng
from .primes import factor_int, is_prime, next_prime
from .residue import ResidueFieldCtx, residue_field

ENUMERATION_BOUND = 10**7


@dataclass(frozen=True)
class QuinticPowerTable:
    q: int
    P: PrimeIdeal
    residues: frozenset

    def __contains__(self, element) -> bool:
        return element in self.residues


def _all_nonzero_elements(ctx: ResidueFieldCtx):
    p = ctx.p
    if ctx.f == 1:
        for a in range(1, p):
            yield a
    elif ctx.f == 2:
        for t in product(range(p), repeat=2):
            if t != (0, 0):
                yield t
    else:
        for t in product(range(p), repeat=4):
            if t != (0, 0, 0, 0):
                yield t


def brute_quintic_table(P: PrimeIdeal) -> QuinticPowerTable:
    """The set of quintic residues of the residue field of P, by exhaustion."""
    if P.kind is PrimeKind.LAMBDA:
        raise InvalidInput("no quintic residue table at the prime over 5")
    if P.absolute_norm() > ENUMERATION_BOUND:
        raise InvalidInput(
            f"residue field of order {P.absolute_norm()} exceeds the enumeration bound"
        )
    ctx = residue_field(P)
    residues = set()
    for x in _all_nonzero_elements(ctx):
        x2 = ctx.mul(x, x)
        residues.add(ctx.mul(ctx.mul(x2, x2), x))
    table = QuinticPowerTable(P.p, P, frozenset(residues))
    assert len(table.residues) == (P.absolute_norm() - 1) // 5
    return table


class FieldDlog:
    """Full discrete logarithms in a residue field by baby-step giant-step.

    The generator is certified by order tests against the factorization of
    the group order; dlog itself is pure multiplication matching, so quintic
    membership (5 | dlog) is independent of the exponentiation shortcut used
    by the symbol engine.
    """

    def __init__(self, P: PrimeIdeal, expected_queries: int = 1000):
        self.ctx = residue_field(P)
        self.order = P.absolute_norm() - 1
        self.g = self._find_generator()
        m = max(1, round((self.order * max(1, expected_queries)) ** 0.5))
        self.m = min(m, 4_000_000, self.order)
        self.baby: dict = {}
        x = self.ctx.one()
        for j in range(self.m):
            self.baby.setdefault(x, j)
            x = self.ctx.mul(x, self.g)
        self.giant_step = self.ctx.pow(self._inverse(self.g), self.m)

    def _inverse(self, x):
        return self.ctx.pow(x, self.order - 1)

    def _find_generator(self):
        ctx = self.ctx
        prime_parts = list(factor_int(self.order))
        for x in _all_nonzero_elements(ctx):
            if all(
                ctx.pow(x, self.order // p) != ctx.one() for p in prime_parts
            ):
                return x
        raise AssertionError("no generator found")

    def dlog(self, x) -> int:
        if self.ctx.is_zero(x):
            raise InvalidInput("dlog of zero")
        y = x
        for i in range(self.order // self.m + 1):
            j = self.baby.get(y)
            if j is not None:
                return (i * self.m + j) % self.order
            y = self.ctx.mul(y, self.giant_step)
        raise AssertionError("dlog search exhausted the group")

    def quintic_class(self, x) -> int:
        """dlog mod 5; 0 exactly for quintic residues."""
        return self.dlog(x) % 5


def relative_norm(gamma: list[CyclotomicInt], n: int) -> CyclotomicInt:
    """Relative norm from the degree-5 radical extension down to Q(zeta_5).

    gamma is a polynomial of degree < 5 in the fifth root of n with
    coefficients in Z[zeta_5]; the norm is the product of its five conjugates
    under the radical's zeta-twists, expanded exactly.  The result must land
    in degree 0, which is asserted.
    """
    if len(gamma) > 5:
        raise InvalidInput("gamma must have degree below 5 in the radical")
    coeffs = list(gamma) + [CyclotomicInt(0)] * (5 - len(gamma))
    if all(c.is_zero() for c in coeffs):
        raise InvalidInput("gamma must be nonzero")

    def mul_radical(a, b):
        out = [CyclotomicInt(0)] * 5
        for i in range(5):
            if a[i].is_zero():
                continue
            for j in range(5):
                k = i + j
                term = a[i] * b[j]
                if k >= 5:
                    out[k - 5] = out[k - 5] + term * n
                else:
                    out[k] = out[k] + term
        return out

    from .cyclo import zeta_power

    result = coeffs
    for i in range(1, 5):
        conj = [coeffs[j] * zeta_power(i * j) for j in range(5)]
        result = mul_radical(result, conj)
    assert all(result[k].is_zero() for k in range(1, 5)), "norm must be radical-free"
    return result[0]


PRIME_CLASSES = ("pm2mod5", "pm7mod25", "not_pm7mod25_and_pm2mod5")


def prime_stream(cls: str, count: int) -> list[int]:
    """Ascending primes in a congruence class used by the theorem shapes."""
    if count < 1:
        raise InvalidInput("count must be at least 1")
    if cls == "pm2mod5":
        pred = lambda p: p % 5 in (2, 3)
    elif cls == "pm7mod25":
        pred = lambda p: p % 25 in (7, 18)
    elif cls == "not_pm7mod25_and_pm2mod5":
        pred = lambda p: p % 5 in (2, 3) and p % 25 not in (7, 18)
    else:
        raise InvalidInput(f"unknown prime class {cls!r}; pick one of {PRIME_CLASSES}")
    out = []
    p = 1
    while len(out) < count:
        p = next_prime(p)
        if pred(p):
            assert is_prime(p)
            out.append(p)
    return out


def sample_field_elements(P: PrimeIdeal, count: int, tag: str = "oracle"):
    """Deterministic sample of nonzero residue-field elements for spot checks."""
    ctx = residue_field(P)
    rng = seeded_rng(tag, P.label(), count)
    out = []
    while len(out) < count:
        c = CyclotomicInt(*(rng.randrange(0, P.p) for _ in range(4)))
        z = ctx.reduce(c)
        if not ctx.is_zero(z):
            out.append((c, z))
    return out
