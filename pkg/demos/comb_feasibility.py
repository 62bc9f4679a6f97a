#!/usr/bin/env python3
"""Sizing the optical realization: comb spacing, cavity, and step budget.

The walker position is a frequency-comb line index, the coin a polarization
state, one walk step one cavity roundtrip.  This script checks a candidate
cavity for the two hardware constraints and reports how many steps survive
the modulator bandwidth and the roundtrip losses.
"""

import math

from coinwalk.optical import (
    CavityConfig,
    frequency_of,
    max_steps,
    resolvable,
    roundtrips_per_step,
    validate_commensurate,
)

GHZ = 2 * math.pi * 1e9


def describe(tag, cfg, bandwidth, floor):
    comm = validate_commensurate(cfg)
    res = resolvable(cfg)
    budget = max_steps(cfg, bandwidth, floor)
    print(f"{tag}:")
    print(f"  commensurate: {'ok' if comm.ok else 'VIOLATION'} ({comm.detail})")
    print(f"  resolvable:   {'ok' if res.ok else 'VIOLATION'} ({res.detail})")
    print(f"  roundtrips per step: {roundtrips_per_step(cfg)}")
    print(f"  step budget: {budget}")
    span = frequency_of(budget, cfg) - frequency_of(-budget, cfg)
    print(f"  comb span after that many steps: {span / GHZ:.1f} GHz\n")


def main():
    # a 1 GHz cavity driven at three free spectral ranges per step
    good = CavityConfig(
        omega0=2 * math.pi * 1.93e14,  # ~1.55 um carrier
        omega_fsr=1.0 * GHZ,
        omega_bar=3.0 * GHZ,
        f=3,
        delta_omega=0.3 * GHZ,
        loss_per_roundtrip=0.02,
    )
    describe("commensurate low-loss cavity", good, bandwidth=600 * GHZ, floor=1e-3)

    # same cavity with the modulator drive detuned half an FSR
    detuned = CavityConfig(
        omega0=good.omega0,
        omega_fsr=good.omega_fsr,
        omega_bar=3.5 * GHZ,
        f=3,
        delta_omega=0.3 * GHZ,
        loss_per_roundtrip=0.02,
    )
    describe("detuned drive", detuned, bandwidth=600 * GHZ, floor=1e-3)

    # a broadband pulse that smears neighboring comb lines together
    broad = CavityConfig(
        omega0=good.omega0,
        omega_fsr=good.omega_fsr,
        omega_bar=3.0 * GHZ,
        f=3,
        delta_omega=2.0 * GHZ,
        loss_per_roundtrip=0.02,
    )
    describe("overlapping pulse spectra", broad, bandwidth=600 * GHZ, floor=1e-3)

    # the sub-FSR regime: several roundtrips per step
    slow = CavityConfig(
        omega0=good.omega0,
        omega_fsr=1.0 * GHZ,
        omega_bar=0.25 * GHZ,
        f=1,
        delta_omega=0.05 * GHZ,
        loss_per_roundtrip=0.001,
    )
    describe("sub-FSR stepping", slow, bandwidth=600 * GHZ, floor=1e-2)


if __name__ == "__main__":
    main()
