"""Ambiguous class rank, the genus matrix, and 5-class-number predictions.

The rank of the ambiguous 5-classes of the degree-20 normal closure over
Q(zeta_5) is d + q* - 3, where d counts ramified primes and 5^q* is the index
of norm units among all units.  The genus computation then forms the one-row
matrix M of norm residue symbols (x1, n / pi_j), with an extra entry
(x1, lambda / lambda) when lambda ramifies, and s = rank M caps the 5-rank of
the pure quintic subfield through the bound t - s.

Every matrix entry is evaluated twice: by the auxiliary-element engine, and
by an independent reduction script that splits the symbol bilinearly into
rational prime-power pairs and applies the inversion and valuation rules plus
global-norm annihilation.  Route disagreement is an internal error; a faithful
value of 0 where the published derivation asserts a nonzero entry is surfaced
as a PAPER_DISCREPANCY flag, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CyclotomicInt, LAMBDA, unit_zeta_onepluszeta
from .errors import EvaluationMismatch, UnsupportedForm
from .forms import Form, FormClassification, classify, lambda_ramified
from .ideals import PrimeIdeal, PrimeKind, split_prime
from .primes import factor_int
from .residue import (
    SymbolExponent,
    conductor,
    local_norm_profile,
    norm_residue_symbol,
    power_residue_symbol,
)

UNIT_RANK_R = 1  # free rank of the cyclotomic units
ROOTS_OF_UNITY_O = 1  # zeta_5 is present


@dataclass(frozen=True)
class AmbiguousRankReport:
    n: int
    d: int
    q_star: int
    t: int
    ramified: tuple[str, ...]
    norm_unit_subgroup: tuple[tuple[int, int], ...]
    r: int = UNIT_RANK_R
    o: int = ROOTS_OF_UNITY_O


@dataclass(frozen=True)
class MatrixEntry:
    column: str
    prime: str
    engine: SymbolExponent
    script: SymbolExponent
    script_steps: tuple[dict, ...]

    @property
    def value(self) -> SymbolExponent:
        return self.engine


@dataclass(frozen=True)
class GenusRankReport:
    n: int
    classification: FormClassification
    t: int
    x1: CyclotomicInt | None = None
    matrix_entries: tuple[MatrixEntry, ...] | None = None
    s: int | None = None
    plus_rank: int = 0
    rank_bound_gamma: int | None = None
    prediction_theorem: dict | None = None
    prediction_derived: dict | None = None
    flags: tuple[dict, ...] = ()


def ramified_count(n: int) -> tuple[tuple[PrimeIdeal, ...], int]:
    """Ramified primes of the degree-5 Kummer extension for n, with count d."""
    cond = conductor(CyclotomicInt(n))
    if cond.lambda_ramified != lambda_ramified(n):
        raise EvaluationMismatch(
            f"lambda ramification of {n}: residue test {cond.lambda_ramified}, "
            f"rational shortcut {lambda_ramified(n)}"
        )
    primes = list(cond.tame_primes)
    if cond.lambda_ramified:
        primes.append(split_prime(5)[0])
    return tuple(primes), len(primes)


def _norm_unit_subgroup(n: int) -> tuple[tuple[tuple[int, int], ...], dict]:
    pairs = []
    profiles = {}
    for i in range(5):
        for j in range(5):
            ok, profile = local_norm_profile(unit_zeta_onepluszeta(i, j), n)
            if ok:
                pairs.append((i, j))
            if (i, j) in ((1, 0), (0, 1)):
                profiles["zeta" if i else "zeta_plus_one"] = profile
    return tuple(sorted(pairs)), profiles


def _subgroup_dim(pairs) -> int:
    size = len(pairs)
    for dim in range(3):
        if size == 5**dim:
            return dim
    raise EvaluationMismatch(f"norm-unit set of size {size} is not a subgroup")


def q_star(n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """The norm-unit index exponent q* with the subgroup behind it.

    S collects the exponent pairs (i, j) whose unit zeta^i (1+zeta)^j is a
    local norm at every ramified prime; q* is its F_5-dimension.
    """
    pairs, _ = _norm_unit_subgroup(n)
    return _subgroup_dim(pairs), pairs


def rank_ambiguous(n: int) -> AmbiguousRankReport:
    """d, q*, and the ambiguous rank t = d + q* - 3 for a supported n."""
    c = classify(n)
    if not c.supported:
        raise UnsupportedForm(f"{n}: {c.reason}")
    ramified, d = ramified_count(n)
    pairs, _ = _norm_unit_subgroup(n)
    subgroup = set(pairs)
    for a in pairs:
        for b in pairs:
            if ((a[0] + b[0]) % 5, (a[1] + b[1]) % 5) not in subgroup:
                raise EvaluationMismatch("norm-unit set is not closed under addition")
    q_star = _subgroup_dim(pairs)
    _check_zeta_axis(n, ramified, pairs)
    t = d + q_star - 3
    if t < 0:
        raise EvaluationMismatch(f"negative ambiguous rank for {n}")
    return AmbiguousRankReport(
        n=n,
        d=d,
        q_star=q_star,
        t=t,
        ramified=tuple(P.label() for P in ramified),
        norm_unit_subgroup=pairs,
    )


def _check_zeta_axis(n, ramified, pairs) -> None:
    # when lambda is unramified, zeta is a norm exactly when every tame prime
    # has absolute norm 1 mod 25 (the unit-norm criterion restricted to zeta)
    tame = [P for P in ramified if P.kind is not PrimeKind.LAMBDA]
    if len(tame) < len(ramified):
        return
    expected = all(P.absolute_norm() % 25 == 1 for P in tame)
    got = (1, 0) in set(pairs)
    if expected != got:
        raise EvaluationMismatch(
            f"zeta norm membership for {n}: criterion says {expected}, symbols say {got}"
        )


def genus_generator(c: FormClassification) -> CyclotomicInt:
    """The Kummer generator x1 of the genus field: q1, or 5*q2 for form 3."""
    if c.form in (Form.FORM1, Form.FORM2):
        return CyclotomicInt(c.q1)
    if c.form is Form.FORM3:
        return CyclotomicInt(5 * c.q2)
    raise UnsupportedForm(f"{c.n}: {c.reason}")


# ---------------------------------------------------------------------------
# Route 2: the reduction script for symbols with rational arguments

def script_norm_symbol(
    beta: int, alpha: int, pi: PrimeIdeal
) -> tuple[SymbolExponent, tuple[dict, ...]]:
    """Evaluate (beta, alpha / pi) for rational beta, alpha by bilinear
    splitting into prime-power pairs and the classical rules:

    - (c, c / pi) = 1: c is the relative norm of its own fifth root;
    - pi | beta-part only: inverse-valuation rule gives -(a'/pi)^v;
    - pi | alpha-part only: inversion then valuation gives +(b'/pi)^v;
    - pi away from both supports: the symbol is 1.
    """
    steps = []
    total = 0
    for p, a in sorted(factor_int(beta).items()):
        for q, b in sorted(factor_int(alpha).items()):
            step = {"beta_part": f"{p}^{a}", "alpha_part": f"{q}^{b}"}
            if p == q:
                step["rule"] = "annihilation: a rational prime is the relative norm of its own fifth root"
                value = 0
            elif pi.p == p:
                sym = power_residue_symbol(CyclotomicInt(q), pi)
                value = (-a * b * sym) % 5
                step["rule"] = f"pi divides the left argument: -v*({q}/pi), ({q}/pi) = {sym}"
            elif pi.p == q:
                sym = power_residue_symbol(CyclotomicInt(p), pi)
                value = (a * b * sym) % 5
                step["rule"] = f"pi divides the right argument: invert then -v*({p}/pi), ({p}/pi) = {sym}"
            else:
                value = 0
                step["rule"] = "pi outside both supports"
            step["value"] = value
            steps.append(step)
            total += value
    return total % 5, tuple(steps)


def script_lambda_entry(x1: int) -> tuple[SymbolExponent, tuple[dict, ...]]:
    """(x1, lambda / lambda) by the product formula over the support of x1."""
    steps = []
    total = 0
    for p, a in sorted(factor_int(x1).items()):
        if p == 5:
            continue
        for P in split_prime(p):
            sym = power_residue_symbol(LAMBDA, P)
            value = (a * sym) % 5
            steps.append(
                {
                    "beta_part": f"{p}^{a}",
                    "alpha_part": "lambda",
                    "rule": f"product formula residue at {P.label()}: +v*(lambda/{P.label()}), value {sym}",
                    "value": value,
                }
            )
            total += value
    return total % 5, tuple(steps)


# ---------------------------------------------------------------------------
# The genus matrix and predictions

_ALPHA11_CLAIM = "hence alpha_11 != 0"


def _discrepancy_flags(c: FormClassification, entries: list[MatrixEntry]) -> list[dict]:
    """PAPER_DISCREPANCY flags where the published derivation asserts a
    nonzero first entry but the faithful computation returns 0."""
    flags = []
    by_prime = {e.prime: e for e in entries}
    pi1 = f"({c.q1})"
    entry = by_prime.get(pi1)
    if entry is None or entry.value != 0:
        return flags
    if c.form is Form.FORM1:
        inner = [f"({c.q2}/{c.q1})_5 != 1"]
    elif c.form is Form.FORM2:
        inner = [f"(5/{c.q1})_5 != 1"]
    else:
        inner = [f"(5/{c.q1})_5 != 1", f"({c.q2}/{c.q1})_5 != 1"]
    flags.append(
        {
            "flag": "PAPER_DISCREPANCY",
            "entry": f"alpha_11 at {pi1}",
            "claim": _ALPHA11_CLAIM,
            "claim_detail": inner,
            "computed": 0,
            "note": (
                "rational residues modulo an inert prime are always fifth powers, "
                "so the quoted nonvanishing cannot occur for an inert q1"
            ),
        }
    )
    return flags


def hypothesis_audit(c: FormClassification) -> dict:
    """Audit of the side hypothesis that q2 and 5 are quintic non-residues
    modulo q1; under the faithful symbol reading it is degenerate for inert
    q1, so the result is recorded as a flag rather than used as a gate."""
    if not c.supported:
        return {}
    P1 = split_prime(c.q1)[0]
    q2_sym = power_residue_symbol(CyclotomicInt(c.q2), P1) if c.q2 else None
    five_sym = power_residue_symbol(CyclotomicInt(5), P1)
    return {
        "q2_quintic_residue_mod_q1": None if q2_sym is None else q2_sym == 0,
        "five_quintic_residue_mod_q1": five_sym == 0,
        "hypothesis_satisfiable": False,
        "note": "every rational integer prime to an inert q1 is a quintic residue",
    }


def genus_matrix(n: int) -> GenusRankReport:
    """The one-row matrix M of genus symbols for n, computed by both routes.

    Raises EvaluationMismatch when the engine and the reduction script
    disagree on any entry.
    """
    c = classify(n)
    if not c.supported:
        raise UnsupportedForm(f"{n}: {c.reason}")
    rank = rank_ambiguous(n)
    x1 = genus_generator(c)
    x1_int = x1.coeffs[0]
    cond = conductor(CyclotomicInt(n))
    entries: list[MatrixEntry] = []
    for idx, P in enumerate(cond.tame_primes, start=1):
        engine = norm_residue_symbol(x1, CyclotomicInt(n), P)
        script, steps = script_norm_symbol(x1_int, n, P)
        if engine != script:
            raise EvaluationMismatch(
                f"(x1, n / {P.label()}) for n={n}: engine {engine}, script {script}"
            )
        entries.append(MatrixEntry(f"pi_{idx}", P.label(), engine, script, steps))
    if cond.lambda_ramified:
        L = split_prime(5)[0]
        engine = norm_residue_symbol(x1, LAMBDA, L)
        script, steps = script_lambda_entry(x1_int)
        if engine != script:
            raise EvaluationMismatch(
                f"(x1, lambda / lambda) for n={n}: engine {engine}, script {script}"
            )
        entries.append(MatrixEntry("lambda", "lambda", engine, script, steps))
    s = 1 if any(e.value for e in entries) else 0
    flags = _discrepancy_flags(c, entries)
    return GenusRankReport(
        n=n,
        classification=c,
        t=rank.t,
        x1=x1,
        matrix_entries=tuple(entries),
        s=s,
        rank_bound_gamma=rank.t - s,
        flags=tuple(flags),
    )


def predict(n: int, mode: str = "theorem") -> GenusRankReport:
    """5-class-number predictions.

    theorem mode keys on the congruence form alone: any supported n gets
    (h_gamma_5, h_k_5) = (1, 5).  derived mode recomputes the bound t - s from
    the engine's own matrix; only a bound of 0 supports the exact claim.
    """
    if mode == "theorem":
        c = classify(n)
        if not c.supported:
            raise UnsupportedForm(f"{n}: {c.reason}")
        return GenusRankReport(
            n=n,
            classification=c,
            t=1,
            prediction_theorem={"h_gamma_5": 1, "h_k_5": 5},
        )
    if mode != "derived":
        raise ValueError(f"unknown prediction mode {mode!r}")
    report = genus_matrix(n)
    bound = report.rank_bound_gamma
    if bound == 0:
        derived = {
            "rank_bound_gamma": 0,
            "h_gamma_5": 1,
            "h_k_5": 5,
            "note": (
                "bound 0 forces a trivial 5-class group below; t = 1 gives 5 | h_k "
                "and the quartic class-number relation then excludes 25 | h_k"
            ),
        }
    else:
        derived = {
            "rank_bound_gamma": bound,
            "h_gamma_5": None,
            "h_k_5": None,
            "note": "bound above 0: no exact class-number claim from this route",
        }
    return GenusRankReport(
        n=report.n,
        classification=report.classification,
        t=report.t,
        x1=report.x1,
        matrix_entries=report.matrix_entries,
        s=report.s,
        rank_bound_gamma=bound,
        prediction_theorem={"h_gamma_5": 1, "h_k_5": 5},
        prediction_derived=derived,
        flags=report.flags,
    )
