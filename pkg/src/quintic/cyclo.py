"""Exact arithmetic in Z[zeta_5].

Elements are stored on the power basis (1, z, z^2, z^3) where z is a fixed
primitive fifth root of unity, using z^4 = -(1 + z + z^2 + z^3).  All
coefficients are arbitrary-precision integers and the representation is
canonical, so equality is coefficient equality.
"""

from __future__ import annotations

from typing import Iterable

Coeffs = tuple[int, int, int, int]


def _reduce5(e0: int, e1: int, e2: int, e3: int, e4: int) -> Coeffs:
    # eliminate the z^4 coordinate via z^4 = -(1+z+z^2+z^3)
    return (e0 - e4, e1 - e4, e2 - e4, e3 - e4)


def _mul(a: Coeffs, b: Coeffs) -> Coeffs:
    p0 = a[0] * b[0]
    p1 = a[0] * b[1] + a[1] * b[0]
    p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0]
    p3 = a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0]
    p4 = a[1] * b[3] + a[2] * b[2] + a[3] * b[1]
    p5 = a[2] * b[3] + a[3] * b[2]
    p6 = a[3] * b[3]
    # z^5 = 1 and z^6 = z fold back into low degrees
    return _reduce5(p0 + p5, p1 + p6, p2, p3, p4)


def _conj(a: Coeffs, r: int) -> Coeffs:
    # z |-> z^r permutes exponents 0..4; collect and eliminate z^4
    e = [0, 0, 0, 0, 0]
    for k in range(4):
        e[(r * k) % 5] += a[k]
    return _reduce5(e[0], e[1], e[2], e[3], e[4])


class CyclotomicInt:
    """An element of Z[zeta_5] in the canonical power basis."""

    __slots__ = ("c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0):
        self.c: Coeffs = (c0, c1, c2, c3)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "CyclotomicInt":
        c = tuple(coeffs)
        if len(c) != 4:
            raise ValueError("expected exactly 4 coefficients")
        return cls(*c)

    @property
    def coeffs(self) -> Coeffs:
        return self.c

    def __add__(self, other):
        o = _coerce(other)
        a, b = self.c, o.c
        return CyclotomicInt(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        a, b = self.c, o.c
        return CyclotomicInt(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        a = self.c
        return CyclotomicInt(-a[0], -a[1], -a[2], -a[3])

    def __mul__(self, other):
        o = _coerce(other)
        return CyclotomicInt(*_mul(self.c, o.c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.c == (other, 0, 0, 0)
        if isinstance(other, CyclotomicInt):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return self.c != (0, 0, 0, 0)

    def __repr__(self):
        return f"CyclotomicInt{self.c}"

    def __str__(self):
        return ",".join(str(x) for x in self.c)

    def conjugate(self, r: int) -> "CyclotomicInt":
        """Apply the ring automorphism tau_r: z |-> z^r, r in {1, 2, 3, 4}."""
        if r % 5 == 0:
            raise ValueError("r must be prime to 5")
        return CyclotomicInt(*_conj(self.c, r % 5))

    def conj_product(self) -> "CyclotomicInt":
        """Product of the three nontrivial conjugates tau_2 tau_3 tau_4."""
        t2 = _conj(self.c, 2)
        return CyclotomicInt(*_mul(_mul(t2, _conj(self.c, 3)), _conj(self.c, 4)))

    def norm(self) -> int:
        """Absolute norm to Z; always nonnegative since Q(zeta_5) is totally complex."""
        n = _mul(self.c, self.conj_product().c)
        assert n[1] == 0 and n[2] == 0 and n[3] == 0, f"norm not rational: {n}"
        assert n[0] >= 0, f"negative norm {n[0]}"
        return n[0]

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0)

    def is_unit(self) -> bool:
        return not self.is_zero() and self.norm() == 1

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0


def _coerce(x) -> CyclotomicInt:
    if isinstance(x, CyclotomicInt):
        return x
    if isinstance(x, int):
        return CyclotomicInt(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Z[zeta_5]")


ZERO = CyclotomicInt(0)
ONE = CyclotomicInt(1)
ZETA = CyclotomicInt(0, 1)
LAMBDA = CyclotomicInt(1, -1)  # 1 - zeta, the prime above 5


def zeta_power(k: int) -> CyclotomicInt:
    k %= 5
    if k < 4:
        return CyclotomicInt(*(1 if i == k else 0 for i in range(4)))
    return CyclotomicInt(-1, -1, -1, -1)


def unit_zeta_onepluszeta(i: int, j: int) -> CyclotomicInt:
    """The unit zeta^i (1+zeta)^j; these generate E/torsion together with -1."""
    return zeta_power(i) * (ONE + ZETA) ** (j % 5 if j >= 0 else j)


def exact_div(a: CyclotomicInt, d: CyclotomicInt) -> CyclotomicInt | None:
    """Return a/d when d divides a exactly in Z[zeta_5], else None."""
    if d.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta_5]")
    n = d.norm()
    t = (a * d.conj_product()).c
    if any(x % n for x in t):
        return None
    return CyclotomicInt(*(x // n for x in t))


def _round_half_to_zero(num: int, den: int) -> int:
    # nearest integer to num/den with den > 0, ties toward zero
    q, r = divmod(num, den)
    if 2 * r > den:
        return q + 1
    if 2 * r == den:
        return q + 1 if num < 0 else q
    return q


_CORRECTIONS_NEAR = [
    (d0, d1, d2, d3)
    for d0 in (-1, 0, 1)
    for d1 in (-1, 0, 1)
    for d2 in (-1, 0, 1)
    for d3 in (-1, 0, 1)
]
_CORRECTIONS_WIDE = [
    (d0, d1, d2, d3)
    for d0 in range(-2, 3)
    for d1 in range(-2, 3)
    for d2 in range(-2, 3)
    for d3 in range(-2, 3)
]


def divmod_round(a: CyclotomicInt, b: CyclotomicInt) -> tuple[CyclotomicInt, CyclotomicInt]:
    """Euclidean division: a = q*b + r with norm(r) < norm(b).

    The quotient is the coefficient-wise nearest rounding of the exact field
    quotient (ties toward zero).  Plain rounding can miss the Euclidean bound
    in a thin corner region of the coefficient box (the residual may reach
    norm 25/16 of the divisor), so a bounded local correction of the quotient
    restores the bound; Z[zeta_5] is norm-Euclidean, hence a valid quotient
    always exists nearby.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta_5]")
    nb = b.norm()
    t = (a * b.conj_product()).c
    q = CyclotomicInt(*(_round_half_to_zero(x, nb) for x in t))
    r = a - q * b
    if r.norm() < nb:
        return q, r
    for deltas in (_CORRECTIONS_NEAR, _CORRECTIONS_WIDE):
        best = None
        best_norm = None
        for d in deltas:
            cand_q = q + CyclotomicInt(*d)
            cand_r = a - cand_q * b
            n = cand_r.norm()
            if best_norm is None or n < best_norm:
                best, best_norm = (cand_q, cand_r), n
        if best_norm is not None and best_norm < nb:
            return best
    raise AssertionError(
        f"Euclidean descent failed: no quotient near {q} for norms {a.norm()}/{nb}"
    )
