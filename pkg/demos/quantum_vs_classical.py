#!/usr/bin/env python3
"""Walk distribution vs the classical binomial, and how their spreads scale.

Runs the coined walk for 200 steps from the symmetric initial state
(1/sqrt2, i/sqrt2), overlays the classical random walk, and sweeps the
step count to show the ballistic (linear) quantum spread against the
diffusive sqrt(n) classical one.  Saves quantum_vs_classical.png.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from coinwalk import (
    classical_distribution,
    evolve,
    hadamard_coin,
    new_walk,
    probability,
    std_dev,
)

N_STEPS = 200
INITIAL = (1 / math.sqrt(2), 1j / math.sqrt(2))


def main():
    coin = hadamard_coin()
    quantum = probability(evolve(new_walk(*INITIAL), coin, N_STEPS))
    classical = classical_distribution(N_STEPS)

    print(f"after n = {N_STEPS} steps:")
    print(f"  quantum   sigma = {std_dev(quantum):8.3f}")
    print(f"  classical sigma = {std_dev(classical):8.3f}  (sqrt(n) = {math.sqrt(N_STEPS):.3f})")
    m = quantum.sites
    occupied = m[quantum.p > 1e-12]
    peak = occupied[np.argmax(quantum.p[quantum.p > 1e-12])]
    print(f"  quantum peak near |m| = {abs(peak)} (front at n/sqrt2 = {N_STEPS / math.sqrt(2):.1f})")

    # spread scaling: ballistic vs diffusive
    ns = np.arange(20, 201, 20)
    sigma_q = [
        std_dev(probability(evolve(new_walk(*INITIAL), coin, int(n)))) for n in ns
    ]
    sigma_c = [math.sqrt(n) for n in ns]
    slope = np.polyfit(ns, sigma_q, 1)[0]
    print(f"  fitted quantum slope: sigma ~ {slope:.4f} n")

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.2))
    even = (quantum.sites % 2) == 0
    ax1.plot(quantum.sites[even], quantum.p[even], lw=1.2, label="quantum walk")
    ax1.plot(
        classical.sites[even],
        classical.p[even],
        "--",
        lw=1.2,
        label="classical walk",
    )
    ax1.set_xlabel("site m")
    ax1.set_ylabel(f"P(m) at n = {N_STEPS}")
    ax1.legend()

    ax2.plot(ns, sigma_q, "o-", label="quantum")
    ax2.plot(ns, sigma_c, "s--", label="classical sqrt(n)")
    ax2.set_xlabel("steps n")
    ax2.set_ylabel("sigma(n)")
    ax2.legend()
    fig.tight_layout()
    fig.savefig("quantum_vs_classical.png", dpi=130)
    print("wrote quantum_vs_classical.png")


if __name__ == "__main__":
    main()
