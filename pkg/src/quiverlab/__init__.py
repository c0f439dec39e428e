"""Workbench for skew-symmetric cluster algebras and their categorification."""

from quiverlab.laurent import LaurentPoly
from quiverlab.quiver import (
    Quiver,
    fan_quiver,
    from_arrows,
    from_exchange_matrix,
    linear_quiver,
    mutate_matrix,
    mutate_quiver,
    to_exchange_matrix,
)
from quiverlab.seed import Seed, exchange_graph, initial_seed, mutate_seed

__all__ = [
    "LaurentPoly",
    "Quiver",
    "Seed",
    "exchange_graph",
    "fan_quiver",
    "from_arrows",
    "from_exchange_matrix",
    "initial_seed",
    "linear_quiver",
    "mutate_matrix",
    "mutate_quiver",
    "mutate_seed",
    "to_exchange_matrix",
]

__version__ = "0.1.0"
