"""Frequency-comb bookkeeping for the optical cavity realization.

Walker position maps to the comb line at omega0 + m * omega_bar; the coin
maps to polarization.  These helpers check the two hardware constraints
(the step size must be an integer number of free spectral ranges, and comb
lines must stay spectrally resolvable) and estimate how many steps a given
cavity supports.  No field dynamics are simulated here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "CavityConfig",
    "CheckResult",
    "frequency_of",
    "wavenumber_of",
    "validate_commensurate",
    "resolvable",
    "max_steps",
    "roundtrips_per_step",
]

SPEED_OF_LIGHT = 299_792_458.0  # m/s

#: relative detuning below which the comb counts as commensurate
COMMENSURATE_TOL = 1e-9


@dataclass(frozen=True)
class CavityConfig:
    """Cavity and pulse parameters, all angular frequencies in rad/s.

    ``f`` is the intended integer ratio omega_bar / omega_fsr;
    ``resolvability_factor`` is the safety margin kappa demanded between
    the comb spacing and the pulse spectral width.
    """

    omega0: float
    omega_bar: float
    omega_fsr: float
    f: int
    delta_omega: float = 0.0
    loss_per_roundtrip: float = 0.0
    resolvability_factor: float = 3.0

    def __post_init__(self):
        if not (self.omega0 > 0.0 and self.omega_bar > 0.0 and self.omega_fsr > 0.0):
            raise ValueError("omega0, omega_bar and omega_fsr must be positive")
        if self.delta_omega < 0.0:
            raise ValueError(f"delta_omega must be >= 0, got {self.delta_omega}")
        if not (0.0 <= self.loss_per_roundtrip < 1.0):
            raise ValueError(
                f"loss_per_roundtrip must lie in [0, 1), got {self.loss_per_roundtrip}"
            )
        if not (self.resolvability_factor > 1.0):
            raise ValueError(
                f"resolvability_factor must exceed 1, got {self.resolvability_factor}"
            )


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a configuration predicate: verdict plus the number behind it."""

    ok: bool
    name: str
    detail: str
    value: float

    def __bool__(self) -> bool:
        return self.ok


def frequency_of(m: int, cfg: CavityConfig) -> float:
    """Angular frequency of comb line ``m``: omega0 + m * omega_bar."""
    return cfg.omega0 + m * cfg.omega_bar


def wavenumber_of(m: int, cfg: CavityConfig) -> float:
    """Free-space wavenumber of comb line ``m`` (reporting only)."""
    return frequency_of(m, cfg) / SPEED_OF_LIGHT


def validate_commensurate(cfg: CavityConfig) -> CheckResult:
    """Check omega_bar = f * omega_fsr within 1e-9 fractional detuning."""
    detuning = abs(cfg.omega_bar - cfg.f * cfg.omega_fsr) / cfg.omega_fsr
    ok = detuning < COMMENSURATE_TOL
    detail = (
        f"omega_bar = {cfg.f} * omega_fsr within tolerance"
        if ok
        else f"omega_bar detuned from {cfg.f} * omega_fsr by {detuning:g} FSR"
    )
    return CheckResult(ok=ok, name="commensurate", detail=detail, value=detuning)


def resolvable(cfg: CavityConfig) -> CheckResult:
    """Check the comb spacing clears the pulse width: omega_bar >= kappa * delta_omega."""
    required = cfg.resolvability_factor * cfg.delta_omega
    ok = cfg.omega_bar >= required
    margin = math.inf if cfg.delta_omega == 0.0 else cfg.omega_bar / cfg.delta_omega
    detail = (
        f"spacing/width = {margin:g} >= {cfg.resolvability_factor:g}"
        if ok
        else f"spacing/width = {margin:g} < {cfg.resolvability_factor:g}"
    )
    return CheckResult(ok=ok, name="resolvable", detail=detail, value=margin)


def max_steps(cfg: CavityConfig, eom_bandwidth: float, intensity_floor: float) -> int:
    """Step budget: the smaller of the bandwidth and the loss allowance.

    After n steps the comb spans |m| <= n, so n * omega_bar must fit the
    modulator band; and the stored intensity (1 - loss)^n must stay above
    ``intensity_floor``.  This min-of-two-budgets model is bookkeeping, not
    derived physics.
    """
    if not (0.0 < intensity_floor < 1.0):
        raise ValueError(f"intensity_floor must lie in (0, 1), got {intensity_floor}")
    if eom_bandwidth < 0.0:
        raise ValueError(f"eom_bandwidth must be >= 0, got {eom_bandwidth}")
    bandwidth_budget = int(eom_bandwidth / cfg.omega_bar)
    if cfg.loss_per_roundtrip == 0.0:
        return bandwidth_budget
    keep = 1.0 - cfg.loss_per_roundtrip
    # largest n with keep^n >= floor; nudge the float quotient then fix up
    n = max(0, int(math.log(intensity_floor) / math.log(keep) + 1e-9))
    while keep ** (n + 1) >= intensity_floor:
        n += 1
    while n > 0 and keep ** n < intensity_floor:
        n -= 1
    return min(bandwidth_budget, n)


def roundtrips_per_step(cfg: CavityConfig) -> int:
    """Cavity roundtrips per walk step (one unless the shift is sub-FSR)."""
    if cfg.omega_bar >= cfg.omega_fsr:
        return 1
    return math.ceil(cfg.omega_fsr / cfg.omega_bar)
