"""Classification of radicands into the three supported congruence shapes.

Supported n are 5th-power-free naturals built from primes q = +-2 (mod 5):

  form 1:  n = q1^e1 * q2        both q_i = +-7 (mod 25)
  form 2:  n = 5 * q1            q1 = +-7 (mod 25)
  form 3:  n = 5 * q1 * q2       at least one q_i not +-7 (mod 25)

Everything else is Unsupported, which is a value rather than an error so
range scans can skip rows gracefully.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidInput, NotFifthPowerFree
from .primes import factor_int

PM7_MOD25 = frozenset({7, 18})
PM2_MOD5 = frozenset({2, 3})

# residues mod 25 whose fourth power is 1; rational fifth powers mod lambda^5
UNRAMIFIED_RESIDUES_MOD25 = frozenset({1, 7, 18, 24})


class Form(enum.Enum):
    FORM1 = "Form1"
    FORM2 = "Form2"
    FORM3 = "Form3"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class FormClassification:
    n: int
    form: Form
    q1: int | None = None
    e1: int | None = None
    q2: int | None = None
    reason: str | None = None
    congruences: dict = field(default_factory=dict)
    hypothesis_flags: dict | None = None  # quintic-residue audit, filled later

    @property
    def supported(self) -> bool:
        return self.form is not Form.UNSUPPORTED

    def recompose(self) -> int:
        if self.form is Form.FORM1:
            return self.q1**self.e1 * self.q2
        if self.form is Form.FORM2:
            return 5 * self.q1
        if self.form is Form.FORM3:
            return 5 * self.q1 * self.q2
        return self.n


def factor_rational(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 2, rejecting non-5th-power-free input."""
    if n < 2:
        raise InvalidInput(f"n must be at least 2, got {n}")
    fac = factor_int(n)
    for p, e in fac.items():
        if e >= 5:
            raise NotFifthPowerFree(f"{p}^{e} divides {n}")
    return sorted(fac.items())


def lambda_ramified(n: int) -> bool:
    """Whether the prime over 5 ramifies in the extension for a fifth root of n.

    For n prime to 5 this is n^4 != 1 (mod 25), i.e. n mod 25 outside
    {1, 7, 18, 24}; any factor of 5 ramifies outright.
    """
    if n % 5 == 0:
        return True
    return pow(n, 4, 25) != 1


def _congruences(n: int, q1: int | None, q2: int | None) -> dict:
    out = {"n_mod25": n % 25}
    if q1 is not None:
        out["q1_mod5"] = q1 % 5
        out["q1_mod25"] = q1 % 25
    if q2 is not None:
        out["q2_mod5"] = q2 % 5
        out["q2_mod25"] = q2 % 25
    return out


def classify(n: int) -> FormClassification:
    fac = factor_rational(n)
    primes = [p for p, _ in fac]

    def unsupported(reason: str) -> FormClassification:
        return FormClassification(
            n, Form.UNSUPPORTED, reason=reason, congruences=_congruences(n, None, None)
        )

    for p in primes:
        if p != 5 and p % 5 not in PM2_MOD5:
            return unsupported(f"prime factor {p} = {p % 5} (mod 5) is out of scope")

    v5 = dict(fac).get(5, 0)
    others = [(p, e) for p, e in fac if p != 5]

    if v5 == 0:
        if len(others) != 2:
            return unsupported("needs exactly two prime factors q1^e1 * q2")
        (pa, ea), (pb, eb) = others
        if ea == 1 and eb == 1:
            q1, e1, q2 = pa, 1, pb  # both exponents 1: smaller prime labeled q1
        elif eb == 1:
            q1, e1, q2 = pa, ea, pb
        elif ea == 1:
            q1, e1, q2 = pb, eb, pa
        else:
            return unsupported("q2 must appear with exponent 1")
        if q1 % 25 not in PM7_MOD25 or q2 % 25 not in PM7_MOD25:
            return unsupported("form 1 requires both primes = +-7 (mod 25)")
        return FormClassification(
            n, Form.FORM1, q1=q1, e1=e1, q2=q2, congruences=_congruences(n, q1, q2)
        )

    if v5 == 1:
        if len(others) == 1:
            q1, e1 = others[0]
            if e1 != 1:
                return unsupported("form 2 requires n = 5 * q1 exactly")
            if q1 % 25 not in PM7_MOD25:
                return unsupported("form 2 requires q1 = +-7 (mod 25)")
            return FormClassification(
                n, Form.FORM2, q1=q1, e1=1, congruences=_congruences(n, q1, None)
            )
        if len(others) == 2:
            (pa, ea), (pb, eb) = others
            if ea != 1 or eb != 1:
                return unsupported("form 3 requires n = 5 * q1 * q2 squarefree")
            a_plain = pa % 25 not in PM7_MOD25
            b_plain = pb % 25 not in PM7_MOD25
            if not (a_plain or b_plain):
                return unsupported("form 3 requires a prime not +-7 (mod 25)")
            # q2 is the factor away from +-7 (mod 25); when both qualify the
            # larger prime takes the q2 slot (fixes x1 = 5*q2 deterministically)
            if a_plain and b_plain:
                q1, q2 = pa, pb
            elif b_plain:
                q1, q2 = pa, pb
            else:
                q1, q2 = pb, pa
            return FormClassification(
                n, Form.FORM3, q1=q1, e1=1, q2=q2, congruences=_congruences(n, q1, q2)
            )
        return unsupported("5 * q1 or 5 * q1 * q2 shapes only")

    return unsupported(f"5^{v5} divides n; supported shapes carry 5 at most once")
