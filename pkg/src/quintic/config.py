"""Run configuration: RNG seed and factorization time budget.

Read once from the environment (QUINTIC_SEED, QUINTIC_RHO_BUDGET_MS) and
overridable from the CLI.  All randomized internals (Pollard rho parameters,
auxiliary-element resampling) derive their streams deterministically from the
seed, so runs with identical inputs and seed are reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_SEED = "QUINTIC_SEED"
ENV_RHO_BUDGET_MS = "QUINTIC_RHO_BUDGET_MS"

DEFAULT_SEED = 1
DEFAULT_RHO_BUDGET_MS = 30_000


@dataclass(frozen=True)
class Config:
    seed: int = DEFAULT_SEED
    rho_budget_ms: int = DEFAULT_RHO_BUDGET_MS


def from_env() -> Config:
    def _int_env(name: str, default: int) -> int:
        raw = os.environ.get(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return int(raw)
        except ValueError:
            raise SystemExit(f"{name} must be an integer, got {raw!r}")

    return Config(
        seed=_int_env(ENV_SEED, DEFAULT_SEED),
        rho_budget_ms=_int_env(ENV_RHO_BUDGET_MS, DEFAULT_RHO_BUDGET_MS),
    )


_current = from_env()


def get_config() -> Config:
    return _current


def set_config(cfg: Config) -> None:
    global _current
    _current = cfg
