"""Coined quantum walk on the line and its wave-interference realizations."""

from coinwalk.walk import (
    Distribution,
    WalkState,
    classical_distribution,
    evolve,
    hadamard_coin,
    new_walk,
    phase_coin,
    probability,
    std_dev,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "Distribution",
    "WalkState",
    "classical_distribution",
    "evolve",
    "hadamard_coin",
    "new_walk",
    "phase_coin",
    "probability",
    "std_dev",
    "step",
    "__version__",
]
