"""Pure quintic field toolkit: exact Z[zeta_5] arithmetic, quintic residue
symbols, ambiguous-class ranks, and 5-class-number predictions."""

from .cyclo import CyclotomicInt, LAMBDA, ONE, ZERO, ZETA, zeta_power
from .errors import (
    EvaluationMismatch,
    FactorBudgetExceeded,
    InvalidInput,
    NonPrime,
    NotFifthPowerFree,
    QuinticError,
    SymbolUndefined,
    UnsupportedForm,
)
from .forms import Form, FormClassification, classify, factor_rational, lambda_ramified
from .genus import (
    AmbiguousRankReport,
    GenusRankReport,
    genus_generator,
    genus_matrix,
    predict,
    q_star,
    ramified_count,
    rank_ambiguous,
)
from .ideals import (
    CyclotomicFactorization,
    PrimeIdeal,
    PrimeKind,
    crt,
    factor_element,
    gcd,
    split_prime,
    valuation,
    xgcd,
)
from .oracle import (
    FieldDlog,
    QuinticPowerTable,
    brute_quintic_table,
    prime_stream,
    relative_norm,
)
from .residue import (
    KummerConductor,
    ResidueFieldCtx,
    SymbolExponent,
    artin_on_kummer,
    conductor,
    is_local_norm_everywhere,
    norm_residue_symbol,
    power_residue_symbol,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
