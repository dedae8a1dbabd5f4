"""Primes of Z[zeta_5]: splitting, valuations, gcd, element factorization, CRT.

Z[zeta_5] is a norm-Euclidean principal ideal domain, so every prime ideal is
carried by a single generator.  Splitting of a rational prime p is governed by
the order of p mod 5: order 4 (p = +-2 mod 5) is inert, order 2 (p = 4 mod 5)
splits into two degree-2 primes, order 1 (p = 1 mod 5) splits into four
degree-1 primes, and p = 5 is totally ramified with (5) = (1 - zeta)^4.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .config import get_config
from .cyclo import (
    CyclotomicInt,
    LAMBDA,
    ONE,
    ZETA,
    divmod_round,
    exact_div,
    zeta_power,
)
from .errors import InvalidInput, NonPrime
from .primes import factor_int, is_prime


class PrimeKind(enum.Enum):
    INERT = "Inert"
    SPLIT_DEG1 = "SplitDeg1"
    SPLIT_DEG2 = "SplitDeg2"
    LAMBDA = "Lambda"


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of Z[zeta_5] with its canonical generator."""

    p: int
    generator: CyclotomicInt
    residue_degree: int
    ramification: int
    kind: PrimeKind
    index: int = 0  # position among the primes over p, in canonical order

    def absolute_norm(self) -> int:
        return self.p**self.residue_degree

    def label(self) -> str:
        if self.kind is PrimeKind.LAMBDA:
            return "lambda"
        if self.kind is PrimeKind.INERT:
            return f"({self.p})"
        return f"({self.p}:{self.index})"

    def __repr__(self):
        return f"PrimeIdeal({self.label()}, f={self.residue_degree}, e={self.ramification})"


def normalize_associate(g: CyclotomicInt) -> CyclotomicInt:
    """Canonical representative among the torsion associates +-zeta^k * g."""
    best = None
    for s in (1, -1):
        for k in range(5):
            cand = (s * g) * zeta_power(k)
            if best is None or cand.coeffs < best.coeffs:
                best = cand
    return best


def _sqrt_mod(a: int, p: int) -> int:
    """Tonelli-Shanks square root mod an odd prime; a must be a QR."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # find a non-residue deterministically
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _fifth_roots_of_unity(p: int) -> list[int]:
    """The four primitive fifth roots of unity mod p = 1 (mod 5), ascending."""
    a = 2
    while True:
        r = pow(a, (p - 1) // 5, p)
        if r != 1:
            break
        a += 1
    roots = sorted({pow(r, k, p) for k in range(1, 5)})
    assert len(roots) == 4
    return roots


@lru_cache(maxsize=None)
def split_prime(p: int) -> tuple[PrimeIdeal, ...]:
    """The primes of Z[zeta_5] over the rational prime p, canonically ordered."""
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if p == 5:
        return (PrimeIdeal(5, LAMBDA, 1, 4, PrimeKind.LAMBDA),)
    residue = p % 5
    if residue in (2, 3):
        return (PrimeIdeal(p, CyclotomicInt(p), 4, 1, PrimeKind.INERT),)
    if residue == 1:
        gens = []
        for r in _fifth_roots_of_unity(p):
            g, _, _ = xgcd(CyclotomicInt(p), ZETA - CyclotomicInt(r))
            g = normalize_associate(g)
            assert g.norm() == p
            gens.append(g)
        gens.sort(key=lambda g: g.coeffs)
        return tuple(
            PrimeIdeal(p, g, 1, 1, PrimeKind.SPLIT_DEG1, index=i)
            for i, g in enumerate(gens)
        )
    # p = 4 (mod 5): Phi_5 = (x^2 + ax + 1)(x^2 + bx + 1) where a + b = 1 and
    # ab = -1, so a, b are the roots of y^2 - y - 1 mod p
    s = _sqrt_mod(5, p)
    gens = []
    for root in sorted({(1 + s) * pow(2, p - 2, p) % p, (1 - s) * pow(2, p - 2, p) % p}):
        val = ZETA * ZETA + root * ZETA + ONE
        g, _, _ = xgcd(CyclotomicInt(p), val)
        g = normalize_associate(g)
        assert g.norm() == p * p
        gens.append(g)
    gens.sort(key=lambda g: g.coeffs)
    return tuple(
        PrimeIdeal(p, g, 2, 1, PrimeKind.SPLIT_DEG2, index=i)
        for i, g in enumerate(gens)
    )


def xgcd(
    a: CyclotomicInt, b: CyclotomicInt
) -> tuple[CyclotomicInt, CyclotomicInt, CyclotomicInt]:
    """Extended gcd: returns (g, x, y) with g = x*a + y*b and (g) = (a, b)."""
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd(0, 0) is undefined")
    r0, r1 = a, b
    x0, x1 = ONE, CyclotomicInt(0)
    y0, y1 = CyclotomicInt(0), ONE
    while not r1.is_zero():
        q, r = divmod_round(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return r0, x0, y0


def gcd(a: CyclotomicInt, b: CyclotomicInt) -> CyclotomicInt:
    return xgcd(a, b)[0]


def unit_inverse(u: CyclotomicInt) -> CyclotomicInt:
    if not u.is_unit():
        raise InvalidInput(f"{u} is not a unit")
    return u.conj_product()


def valuation(a: CyclotomicInt, P: PrimeIdeal) -> int:
    """v_P(a) for a != 0, by exact division by the generator."""
    if a.is_zero():
        raise InvalidInput("valuation of zero is infinite")
    v = 0
    g = P.generator
    if P.kind is PrimeKind.INERT:
        # dividing by the rational generator is coefficient-wise
        p = P.p
        while all(c % p == 0 for c in a.coeffs):
            a = CyclotomicInt(*(c // p for c in a.coeffs))
            v += 1
        return v
    while True:
        q = exact_div(a, g)
        if q is None:
            return v
        a = q
        v += 1


@dataclass(frozen=True)
class CyclotomicFactorization:
    """unit * prod generator^exponent, with primes pairwise distinct."""

    unit: CyclotomicInt
    factors: tuple[tuple[PrimeIdeal, int], ...]

    @property
    def e_lambda(self) -> int:
        for P, e in self.factors:
            if P.kind is PrimeKind.LAMBDA:
                return e
        return 0

    def value(self) -> CyclotomicInt:
        out = self.unit
        for P, e in self.factors:
            out = out * P.generator**e
        return out

    def primes(self) -> tuple[PrimeIdeal, ...]:
        return tuple(P for P, _ in self.factors)

    def without(self, P: PrimeIdeal) -> "CyclotomicFactorization":
        return CyclotomicFactorization(
            self.unit, tuple((Q, e) for Q, e in self.factors if Q != P)
        )


def factor_element(
    a: CyclotomicInt, budget_ms: int | None = None
) -> CyclotomicFactorization:
    """Factor a nonzero element into prime-ideal generators times a unit.

    Works through the rational factorization of norm(a); the residual after
    dividing out every prime power has norm 1 and is returned as the unit.
    """
    if a.is_zero():
        raise InvalidInput("cannot factor zero")
    n = a.norm()
    rational = factor_int(n, budget_ms=budget_ms)
    factors: list[tuple[PrimeIdeal, int]] = []
    rest = a
    for p in sorted(rational):
        for P in split_prime(p):
            v = valuation(rest, P)
            if v:
                factors.append((P, v))
                q = exact_div(rest, P.generator**v)
                assert q is not None
                rest = q
    assert rest.norm() == 1, f"residual {rest} is not a unit"
    factors.sort(key=lambda t: (t[0].p, t[0].generator.coeffs))
    return CyclotomicFactorization(rest, tuple(factors))


# ---------------------------------------------------------------------------
# CRT with lattice size reduction

def _lll_4(basis: list[list[Fraction]], delta=Fraction(3, 4)) -> list[list[Fraction]]:
    """Plain LLL on a 4x4 rational basis (rows are vectors)."""
    b = [row[:] for row in basis]
    n = len(b)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gso():
        bstar = []
        mu = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            v = b[i][:]
            for j in range(i):
                mu[i][j] = dot(b[i], bstar[j]) / dot(bstar[j], bstar[j])
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = int(q) if q.denominator == 1 else round(q)
            if r:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
                bstar, mu = gso()
        if dot(bstar[k], bstar[k]) >= (delta - mu[k][k - 1] ** 2) * dot(
            bstar[k - 1], bstar[k - 1]
        ):
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu = gso()
            k = max(k - 1, 1)
    return b


def reduce_mod_ideal(x: CyclotomicInt, modulus: CyclotomicInt) -> CyclotomicInt:
    """Size-reduce x modulo the ideal (modulus) by nearest-plane rounding.

    The ideal is the rank-4 lattice spanned by modulus * zeta^k in coefficient
    space; the basis is LLL-reduced first so the residual stays within a small
    multiple of the modulus norm.
    """
    basis = [list(map(Fraction, (modulus * zeta_power(k)).coeffs)) for k in range(4)]
    red = _lll_4(basis)

    def dot(u, v):
        return sum(a * b for a, b in zip(u, v))

    bstar = []
    for i in range(4):
        v = red[i][:]
        for w in bstar:
            v = [x - (dot(red[i], w) / dot(w, w)) * y for x, y in zip(v, w)]
        bstar.append(v)
    t = list(map(Fraction, x.coeffs))
    for i in range(3, -1, -1):
        c = dot(t, bstar[i]) / dot(bstar[i], bstar[i])
        r = round(c)
        if r:
            t = [a - r * bcoef for a, bcoef in zip(t, red[i])]
    out = CyclotomicInt(*(int(v) for v in t))
    assert exact_div(x - out, modulus) is not None
    return out


def crt(
    congruences: list[tuple[CyclotomicInt, CyclotomicInt]],
) -> tuple[CyclotomicInt, CyclotomicInt]:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli.

    Returns (x, M) where M is the product of the moduli and x is size-reduced
    modulo (M).
    """
    if not congruences:
        raise InvalidInput("crt needs at least one congruence")
    x, m = congruences[0]
    for r2, m2 in congruences[1:]:
        g, s, t = xgcd(m, m2)
        if not g.is_unit():
            raise InvalidInput(f"moduli not coprime: gcd has norm {g.norm()}")
        ginv = unit_inverse(g)
        # x' = x * (t*m2) + r2 * (s*m) solves both congruences
        x = x * t * m2 * ginv + r2 * s * m * ginv
        m = m * m2
        x = reduce_mod_ideal(x, m)
    return x, m


def random_small_element(rng: random.Random, bound: int = 2) -> CyclotomicInt:
    return CyclotomicInt(*(rng.randint(-bound, bound) for _ in range(4)))


def seeded_rng(*context) -> random.Random:
    return random.Random(":".join([str(get_config().seed), *map(str, context)]))
