"""One-loop effective potentials: thermal, compact and twisted geometries."""

from ._effpot import (
    ConvergenceError,
    DivergenceError,
    DomainError,
    Error,
    PoleError,
    ResidualPoleError,
    compact,
    convergence,
    invariants,
    ledger_json,
    rs_massless_casimir,
    scherk_schwarz,
    sm_gauge,
    susy,
    sweep,
    thermal,
    topological_mass,
    twisted,
)

__all__ = [
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "Error",
    "PoleError",
    "ResidualPoleError",
    "compact",
    "convergence",
    "invariants",
    "ledger_json",
    "rs_massless_casimir",
    "scherk_schwarz",
    "sm_gauge",
    "susy",
    "sweep",
    "thermal",
    "topological_mass",
    "twisted",
]
