"""Quintic residue symbols in Z[zeta_5].

Two symbols live here.  The power residue symbol (alpha / P) is computed
directly in the residue field of P: alpha^((N(P)-1)/5) equals a power of the
image of zeta, and the exponent in {0..4} is the symbol.  The norm residue
symbol (beta, alpha / P) is evaluated through an auxiliary element beta0
congruent to beta at P and to 1 at every other divisor of the conductor of
the Kummer extension generated by a fifth root of alpha; the Artin action of
the leftover ideal (beta0) / P^v on that fifth root gives the symbol.  At the
prime over 5 the residue field collapses all fifth roots of unity, so that
symbol is always evaluated through the product formula instead.

Exponent conventions follow the classical ones: for P outside the conductor
the symbol is (alpha / P)^(-v_P(beta)), and the Artin symbol of an ideal
coprime to the conductor acts on the fifth root with the positive exponent
sum of its prime power residue symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclo import CyclotomicInt, LAMBDA, ONE, zeta_power
from .errors import FactorBudgetExceeded, InvalidInput, SymbolUndefined
from .ideals import (
    CyclotomicFactorization,
    PrimeIdeal,
    PrimeKind,
    crt,
    exact_div,
    factor_element,
    random_small_element,
    seeded_rng,
    split_prime,
    valuation,
)

# An element of F_5: the discrete log base zeta of a fifth root of unity.
SymbolExponent = int

LAMBDA_EXPONENT_BOUND = 10  # overshoot modulus lambda^10 covers the wild conductor
_BETA0_ATTEMPTS = 8


# ---------------------------------------------------------------------------
# Residue fields of unramified primes

class ResidueFieldCtx:
    """Arithmetic context for the residue field of an unramified prime.

    Elements are coefficient tuples mod p against the irreducible factor of
    x^4 + x^3 + x^2 + x + 1 cut out by the prime's generator; the image of
    zeta has exact multiplicative order 5.
    """

    def __init__(self, P: PrimeIdeal):
        if P.kind is PrimeKind.LAMBDA:
            raise SymbolUndefined("no quintic residue context at the prime over 5")
        self.P = P
        self.p = P.p
        self.f = P.residue_degree
        self.order = P.absolute_norm()
        assert (self.order - 1) % 5 == 0
        self.exp = (self.order - 1) // 5
        if P.kind is PrimeKind.SPLIT_DEG1:
            self.root = self._matching_root()
        elif P.kind is PrimeKind.SPLIT_DEG2:
            self.quad_coeff = self._matching_quad_coeff()
        self.zeta_powers = tuple(self.reduce(zeta_power(k)) for k in range(5))
        assert len(set(self.zeta_powers)) == 5, "zeta image must have order 5"

    def _matching_root(self) -> int:
        from .ideals import _fifth_roots_of_unity

        for r in _fifth_roots_of_unity(self.p):
            if exact_div(CyclotomicInt(0, 1) - CyclotomicInt(r), self.P.generator) is not None:
                return r
        raise AssertionError(f"no root of the cyclotomic factor matches {self.P}")

    def _matching_quad_coeff(self) -> int:
        from .ideals import _sqrt_mod

        p = self.p
        s = _sqrt_mod(5, p)
        inv2 = pow(2, p - 2, p)
        for a in sorted({(1 + s) * inv2 % p, (1 - s) * inv2 % p}):
            val = zeta_power(2) + a * zeta_power(1) + ONE
            if exact_div(val, self.P.generator) is not None:
                return a
        raise AssertionError(f"no quadratic factor matches {self.P}")

    def reduce(self, a: CyclotomicInt):
        p = self.p
        c = a.coeffs
        if self.P.kind is PrimeKind.INERT:
            return (c[0] % p, c[1] % p, c[2] % p, c[3] % p)
        if self.P.kind is PrimeKind.SPLIT_DEG1:
            r = self.root
            return (c[0] + r * (c[1] + r * (c[2] + r * c[3]))) % p
        # degree 2: substitute zeta -> x with x^2 = -a*x - 1
        a1 = self.quad_coeff
        # x^2 = -a1 x - 1, x^3 = (a1^2 - 1) x + a1
        t0 = (c[0] - c[2] + a1 * c[3]) % p
        t1 = (c[1] - a1 * c[2] + (a1 * a1 - 1) * c[3]) % p
        return (t0, t1)

    def mul(self, u, v):
        p = self.p
        if self.f == 1:
            return u * v % p
        if self.f == 2:
            a1 = self.quad_coeff
            hi = u[1] * v[1]
            return ((u[0] * v[0] - hi) % p, (u[0] * v[1] + u[1] * v[0] - a1 * hi) % p)
        a, b = u, v
        p0 = a[0] * b[0]
        p1 = a[0] * b[1] + a[1] * b[0]
        p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
        p3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
        p4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
        p5 = a[2] * b[3] + a[3] * b[2]
        p6 = a[3] * b[3]
        c0, c1, c2, c3, c4 = p0 + p5, p1 + p6, p2, p3, p4
        return ((c0 - c4) % p, (c1 - c4) % p, (c2 - c4) % p, (c3 - c4) % p)

    def one(self):
        if self.f == 1:
            return 1
        if self.f == 2:
            return (1, 0)
        return (1, 0, 0, 0)

    def is_zero(self, u) -> bool:
        if self.f == 1:
            return u == 0
        return all(x == 0 for x in u)

    def pow(self, u, n: int):
        result = self.one()
        base = u
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result


@lru_cache(maxsize=None)
def residue_field(P: PrimeIdeal) -> ResidueFieldCtx:
    return ResidueFieldCtx(P)


def power_residue_symbol(alpha: CyclotomicInt, P: PrimeIdeal) -> SymbolExponent:
    """Exponent e with alpha^((N(P)-1)/5) = zeta^e in the residue field of P."""
    if P.kind is PrimeKind.LAMBDA:
        raise SymbolUndefined("power residue symbol is undefined at the prime over 5")
    ctx = residue_field(P)
    z = ctx.reduce(alpha)
    if ctx.is_zero(z):
        raise SymbolUndefined(f"alpha lies in {P}; the symbol requires v_P(alpha) = 0")
    w = ctx.pow(z, ctx.exp)
    for e in range(5):
        if w == ctx.zeta_powers[e]:
            return e
    raise AssertionError(f"{w} is not a fifth root of unity in the residue field of {P}")


# ---------------------------------------------------------------------------
# Fifth powers modulo lambda^5 and the conductor

def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row-style upper-triangular HNF of a nonsingular 4x4 integer matrix."""
    m = [r[:] for r in rows]
    n = 4
    for j in range(n):
        piv = None
        for i in range(j, n):
            if m[i][j]:
                if piv is None or abs(m[i][j]) < abs(m[piv][j]):
                    piv = i
        while True:
            done = True
            for i in range(j, n):
                if i != piv and m[i][j]:
                    q = m[i][j] // m[piv][j]
                    m[i] = [x - q * y for x, y in zip(m[i], m[piv])]
                    if m[i][j]:
                        piv = i
                        done = False
            if done:
                break
        m[j], m[piv] = m[piv], m[j]
        if m[j][j] < 0:
            m[j] = [-x for x in m[j]]
    for i in range(n):
        for k in range(i + 1, n):
            q = m[i][k] // m[k][k]
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[k])]
    return m


@lru_cache(maxsize=None)
def _lambda5_hnf() -> tuple[tuple[int, ...], ...]:
    mod = LAMBDA**5
    rows = [list((mod * zeta_power(k)).coeffs) for k in range(4)]
    return tuple(tuple(r) for r in _hnf_rows(rows))


def reduce_mod_lambda5(x: CyclotomicInt) -> tuple[int, int, int, int]:
    """Canonical representative of x modulo the ideal (lambda^5)."""
    h = _lambda5_hnf()
    t = list(x.coeffs)
    for i in range(4):
        q = t[i] // h[i][i]
        if q:
            t = [a - q * b for a, b in zip(t, h[i])]
    return tuple(t)


@lru_cache(maxsize=None)
def fifth_powers_mod_lambda5() -> frozenset[tuple[int, int, int, int]]:
    """All classes u^5 mod lambda^5 over units u of Z[zeta_5]/lambda^5."""
    h = _lambda5_hnf()
    out = set()
    for a0 in range(h[0][0]):
        for a1 in range(h[1][1]):
            for a2 in range(h[2][2]):
                for a3 in range(h[3][3]):
                    if (a0 + a1 + a2 + a3) % 5 == 0:
                        continue  # lies in (lambda); not a unit
                    x = CyclotomicInt(a0, a1, a2, a3)
                    out.add(reduce_mod_lambda5(x**5))
    return frozenset(out)


def is_fifth_power_mod_lambda5(x: CyclotomicInt) -> bool:
    return reduce_mod_lambda5(x) in fifth_powers_mod_lambda5()


@dataclass(frozen=True)
class KummerConductor:
    """Ramification data of the degree-5 Kummer extension attached to alpha."""

    alpha_normalized: CyclotomicInt
    tame_primes: tuple[PrimeIdeal, ...]
    lambda_ramified: bool
    lambda_exponent_bound: int = LAMBDA_EXPONENT_BOUND


_conductor_cache: dict[tuple[int, int, int, int], KummerConductor] = {}


def conductor(alpha: CyclotomicInt) -> KummerConductor:
    """Tame ramified primes and the lambda ramification flag for alpha.

    alpha is normalized fifth-power-free first (prime exponents reduced mod
    5); lambda is unramified exactly when v_lambda of the normalized element
    is 0 and its class mod lambda^5 is a fifth power.
    """
    if alpha.is_zero():
        raise InvalidInput("conductor of zero is undefined")
    key = alpha.coeffs
    hit = _conductor_cache.get(key)
    if hit is not None:
        return hit
    fac = factor_element(alpha)
    normalized = fac.unit
    tame = []
    v_lambda = 0
    for P, e in fac.factors:
        r = e % 5
        if r:
            normalized = normalized * P.generator**r
        if P.kind is PrimeKind.LAMBDA:
            v_lambda = r
        elif r:
            tame.append(P)
    if v_lambda:
        lam_ram = True
    else:
        lam_ram = not is_fifth_power_mod_lambda5(normalized)
    tame.sort(key=lambda P: (P.p, P.generator.coeffs))
    result = KummerConductor(normalized, tuple(tame), lam_ram)
    _conductor_cache[key] = result
    return result


def fifth_power_free(alpha: CyclotomicInt) -> CyclotomicInt:
    return conductor(alpha).alpha_normalized


# ---------------------------------------------------------------------------
# Norm residue symbol

def artin_on_kummer(
    Q: CyclotomicFactorization,
    alpha: CyclotomicInt,
    cond: KummerConductor | None = None,
) -> SymbolExponent:
    """Artin symbol of the ideal carried by Q acting on a fifth root of alpha.

    Every prime of Q must avoid the conductor of that Kummer extension; the
    Frobenius at P multiplies the fifth root by zeta^(alpha/P), so exponents
    add over the factorization.
    """
    if cond is None:
        cond = conductor(alpha)
    alpha_n = cond.alpha_normalized
    total = 0
    for P, e in Q.factors:
        if P.kind is PrimeKind.LAMBDA:
            raise InvalidInput("Artin input must avoid the prime over 5")
        if P in cond.tame_primes:
            raise InvalidInput(f"Artin input {P} meets the conductor")
        total += e * power_residue_symbol(alpha_n, P)
    return total % 5


_symbol_cache: dict[tuple, SymbolExponent] = {}


def _beta0_congruences(
    beta: CyclotomicInt, P: PrimeIdeal, cond: KummerConductor
) -> tuple[list[tuple[CyclotomicInt, CyclotomicInt]], int]:
    b = valuation(beta, P)
    # matching beta to exponent b + 1 pins v_P(beta0) = b and makes beta0/beta
    # a 1-unit at P, which the plain congruence mod P would not do once b > 0
    congruences = [(beta, P.generator ** (b + 1))]
    for T in cond.tame_primes:
        if T != P:
            congruences.append((ONE, T.generator))
    congruences.append((ONE, LAMBDA**LAMBDA_EXPONENT_BOUND))
    return congruences, b


def norm_residue_symbol(
    beta: CyclotomicInt,
    alpha: CyclotomicInt,
    P: PrimeIdeal,
    _tweak: CyclotomicInt | None = None,
) -> SymbolExponent:
    """The quintic norm residue symbol (beta, alpha / P) as an exponent in F_5.

    Trivial (0) exactly when beta is a local norm at P from the Kummer
    extension attached to alpha.
    """
    if beta.is_zero() or alpha.is_zero():
        raise InvalidInput("norm residue symbol needs nonzero arguments")
    cache_key = None
    if _tweak is None:
        cache_key = (beta.coeffs, alpha.coeffs, P)
        hit = _symbol_cache.get(cache_key)
        if hit is not None:
            return hit
    cond = conductor(alpha)
    alpha_n = cond.alpha_normalized

    if P.kind is PrimeKind.LAMBDA:
        # product formula: the symbol at lambda balances all the others;
        # only ramified primes of alpha and divisors of beta can contribute
        relevant = set(cond.tame_primes)
        for Q, _ in factor_element(beta).factors:
            if Q.kind is not PrimeKind.LAMBDA:
                relevant.add(Q)
        total = 0
        for Q in sorted(relevant, key=lambda q: (q.p, q.generator.coeffs)):
            total += norm_residue_symbol(beta, alpha, Q)
        result = (-total) % 5
    elif P in cond.tame_primes:
        congruences, b = _beta0_congruences(beta, P, cond)
        beta0, modulus = crt(congruences)
        if _tweak is not None:
            beta0 = beta0 + _tweak * modulus
        fac = None
        for attempt in range(_BETA0_ATTEMPTS):
            try:
                fac = factor_element(beta0)
                break
            except FactorBudgetExceeded:
                if attempt == _BETA0_ATTEMPTS - 1:
                    raise
                rng = seeded_rng("beta0", P.label(), beta.coeffs, alpha.coeffs, attempt)
                beta0 = beta0 + random_small_element(rng) * modulus
        assert fac is not None
        v_here = 0
        for Q, e in fac.factors:
            if Q == P:
                v_here = e
        assert v_here == b, f"auxiliary element has v_P {v_here}, expected {b}"
        result = artin_on_kummer(fac.without(P), alpha_n, cond)
    else:
        b = valuation(beta, P)
        result = (-b * power_residue_symbol(alpha_n, P)) % 5 if b else 0

    if cache_key is not None:
        _symbol_cache[cache_key] = result
    return result


def ramified_primes(n_alpha: CyclotomicInt) -> tuple[PrimeIdeal, ...]:
    """All ramified primes of the Kummer extension for alpha, lambda included."""
    cond = conductor(n_alpha)
    out = list(cond.tame_primes)
    if cond.lambda_ramified:
        out.append(split_prime(5)[0])
    return tuple(out)


def is_local_norm_everywhere(u: CyclotomicInt, n: int) -> bool:
    """Whether the unit u is a local norm at every ramified prime of the
    extension generated by a fifth root of n.

    By the Hasse norm principle for cyclic extensions this decides global
    norm membership; symbols at unramified primes vanish since v_P(u) = 0.
    """
    ok, _ = local_norm_profile(u, n)
    return ok


def local_norm_profile(
    u: CyclotomicInt, n: int
) -> tuple[bool, dict[str, SymbolExponent]]:
    """Local-norm test plus the per-prime symbol vector behind it."""
    if u.is_zero() or u.norm() != 1:
        raise InvalidInput("expected a unit of Z[zeta_5]")
    if n < 2:
        raise InvalidInput("n must be at least 2")
    alpha = CyclotomicInt(n)
    profile: dict[str, SymbolExponent] = {}
    for P in ramified_primes(alpha):
        profile[P.label()] = norm_residue_symbol(u, alpha, P)
    return all(v == 0 for v in profile.values()), profile


def conjugate_prime(P: PrimeIdeal, r: int) -> PrimeIdeal:
    """The image of P under tau_r: z -> z^r."""
    if P.kind in (PrimeKind.INERT, PrimeKind.LAMBDA):
        return P
    g = P.generator.conjugate(r)
    for Q in split_prime(P.p):
        if exact_div(g, Q.generator) is not None:
            return Q
    raise AssertionError(f"conjugate of {P} not found over {P.p}")
