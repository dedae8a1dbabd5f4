"""Exception taxonomy with stable CLI exit codes."""


class QuinticError(Exception):
    exit_code = 1


class InvalidInput(QuinticError):
    """Bad or out-of-contract input (malformed n, bad element syntax, ...)."""

    exit_code = 2


class NonPrime(InvalidInput):
    pass


class NotFifthPowerFree(InvalidInput):
    pass


class SymbolUndefined(InvalidInput):
    """Residue symbol requested where it does not exist (P over 5, or P | alpha)."""


class UnsupportedForm(QuinticError):
    """The radicand is 5th-power-free but fits none of the supported shapes."""

    exit_code = 3


class FactorBudgetExceeded(QuinticError):
    """Integer factorization ran past the configured time budget."""

    exit_code = 4

    def __init__(self, n: int, budget_ms: int):
        super().__init__(f"factoring {n} exceeded the {budget_ms} ms budget")
        self.n = n
        self.budget_ms = budget_ms


class EvaluationMismatch(QuinticError):
    """Two independent evaluation routes disagreed; internal consistency failure."""

    exit_code = 5
