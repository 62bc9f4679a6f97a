"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with ``pytest -s`` to see them inline) and enforcing
its stated tolerance and runtime budget.
"""

import math
import time

import numpy as np
import pytest

from coinwalk.cli import main
from coinwalk.continuum import (
    FieldGrid,
    airy,
    continuum_solution,
    default_grid,
    intensity,
    seed_field,
    spectral_solve,
    walk_seeds,
)
from coinwalk.decoupled import verify_equivalence
from coinwalk.optical import (
    CavityConfig,
    max_steps,
    resolvable,
    validate_commensurate,
)
from coinwalk.walk import (
    classical_distribution,
    evolve,
    hadamard_coin,
    new_walk,
    probability,
    std_dev,
)
from oracles import airy_series_reference

SQRT1_2 = 1.0 / math.sqrt(2.0)
SYMMETRIC_STATE = (SQRT1_2, 1j * SQRT1_2)


def report(criterion: str, ok: bool, detail: str) -> None:
    print(f"acceptance {criterion}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"{criterion}: {detail}"


def quantum_distribution(n: int):
    return probability(evolve(new_walk(*SYMMETRIC_STATE), hadamard_coin(), n))


def test_criterion_1_walk_distribution():
    start = time.perf_counter()
    dist = quantum_distribution(200)
    elapsed = time.perf_counter() - start
    p, m = dist.p, dist.sites
    asym = float(np.max(np.abs(p - p[::-1])))
    odd_zero = bool(np.all(p[m % 2 != 0] == 0.0))
    norm_gap = abs(float(p.sum()) - 1.0)
    peak = int(m[m > 0][np.argmax(p[m > 0])])
    ok = asym < 1e-12 and odd_zero and norm_gap < 1e-12 and 130 <= peak <= 145 and elapsed < 1.0
    report(
        "1 (walk distribution at n=200)",
        ok,
        f"asym={asym:.2e}, odd sites zero={odd_zero}, norm gap={norm_gap:.2e}, "
        f"peak at |m|={peak}, {elapsed * 1e3:.0f} ms",
    )


def test_criterion_2_classical_baseline():
    start = time.perf_counter()
    sigma_err = max(
        abs(std_dev(classical_distribution(n)) - math.sqrt(n)) for n in (4, 100, 200)
    )
    norm_gap = abs(float(classical_distribution(200).p.sum()) - 1.0)
    elapsed = time.perf_counter() - start
    ok = sigma_err < 1e-10 and norm_gap < 1e-12 and elapsed < 1.0
    report(
        "2 (classical baseline)",
        ok,
        f"max sigma error={sigma_err:.2e}, norm gap={norm_gap:.2e}, {elapsed * 1e3:.0f} ms",
    )


def test_criterion_3_linear_spreading():
    start = time.perf_counter()
    ns = np.arange(50, 201, 10, dtype=np.float64)
    sigma = np.array([std_dev(quantum_distribution(int(n))) for n in ns])
    design = np.vstack([ns, np.ones_like(ns)]).T
    coef, *_ = np.linalg.lstsq(design, sigma, rcond=None)
    pred = design @ coef
    r_sq = 1.0 - float(np.sum((sigma - pred) ** 2) / np.sum((sigma - sigma.mean()) ** 2))
    q_ratio = float(sigma[ns == 200][0] / sigma[ns == 100][0])
    c_ratio = std_dev(classical_distribution(200)) / std_dev(classical_distribution(100))
    elapsed = time.perf_counter() - start
    ok = (
        r_sq >= 0.999
        and 1.9 <= q_ratio <= 2.1
        and 1.40 <= c_ratio <= 1.43
        and elapsed < 5.0
    )
    report(
        "3 (linear spreading)",
        ok,
        f"R^2={r_sq:.6f}, quantum ratio={q_ratio:.4f}, classical ratio={c_ratio:.4f}, "
        f"{elapsed:.2f} s",
    )


def test_criterion_4_decoupling_equivalence():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(20):
        theta = math.acos(2.0 * rng.random() - 1.0)
        phi = 2.0 * math.pi * rng.random()
        initial = (math.cos(theta / 2.0), math.sin(theta / 2.0) * np.exp(1j * phi))
        worst = max(worst, verify_equivalence(initial, 200))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-12 and elapsed < 10.0
    report(
        "4 (decoupling equivalence)",
        ok,
        f"worst deviation over 20 states={worst:.2e}, {elapsed:.2f} s",
    )


def test_criterion_5_airy_accuracy():
    xs = np.linspace(-10.0, 5.0, 1000)
    mine = airy(xs)
    worst = max(
        abs(v - float(airy_series_reference(x))) for x, v in zip(xs, mine)
    )
    h = 1e-3
    grid = np.linspace(-8.0, 4.0, 481)
    second = (
        -airy(grid + 2 * h)
        + 16 * airy(grid + h)
        - 30 * airy(grid)
        + 16 * airy(grid - h)
        - airy(grid - 2 * h)
    ) / (12 * h * h)
    residual = float(np.max(np.abs(second - grid * airy(grid))))
    ok = worst < 1e-10 and residual < 1e-7
    report(
        "5 (airy function)",
        ok,
        f"max |airy-oracle|={worst:.2e} on 1000 pts, ODE residual={residual:.2e}",
    )


def _spectral_discrepancy(n_points: int) -> float:
    r_params, _ = walk_seeds(*SYMMETRIC_STATE, alpha=0.4)
    xi = default_grid(200.0, n_points, span=8.0)
    ana = continuum_solution(r_params, xi, 200.0, 200).values
    plus = spectral_solve(FieldGrid(xi, seed_field(r_params, xi, 1), 0.0), 200.0, 1)
    minus = spectral_solve(FieldGrid(xi, seed_field(r_params, xi, -1), 0.0), 200.0, -1)
    numeric = plus.values + minus.values
    window = np.abs(xi) <= 800.0
    a = ana[window] / np.max(np.abs(ana[window]))
    s = numeric[window] / np.max(np.abs(numeric[window]))
    return float(np.max(np.abs(a - s)))


def test_criterion_6_analytic_vs_spectral():
    start = time.perf_counter()
    fine = _spectral_discrepancy(8192)
    coarse = _spectral_discrepancy(2048)
    elapsed = time.perf_counter() - start
    ok = fine <= 1e-6 and fine < coarse and elapsed < 5.0
    report(
        "6 (analytic vs spectral)",
        ok,
        f"L_inf at 8192 pts={fine:.2e}, at 2048 pts={coarse:.2e}, {elapsed:.2f} s",
    )


def test_criterion_7_continuum_profile():
    start = time.perf_counter()
    r_params, l_params = walk_seeds(*SYMMETRIC_STATE, alpha=0.4)
    xi = default_grid(200.0, 8192)
    profile = intensity(
        continuum_solution(r_params, xi, 200.0, 200),
        continuum_solution(l_params, xi, 200.0, 200),
    )
    right = xi > 0
    lobe_pos = float(xi[right][np.argmax(profile[right])])
    lobe_neg = float(xi[~right][np.argmax(profile[~right])])
    dist = quantum_distribution(200)
    m, p = dist.sites, dist.p
    peak_pos = int(m[m > 0][np.argmax(p[m > 0])])
    peak_neg = int(m[m < 0][np.argmax(p[m < 0])])
    elapsed = time.perf_counter() - start
    symmetric = abs(lobe_pos + lobe_neg) < 1e-9
    aligned = abs(lobe_pos - peak_pos) <= 5.0 and abs(lobe_neg - peak_neg) <= 5.0
    ok = symmetric and aligned and elapsed < 5.0
    report(
        "7 (continuum two-lobe profile)",
        ok,
        f"continuum lobes at {lobe_neg:.1f}/{lobe_pos:.1f}, walk peaks at "
        f"{peak_neg}/{peak_pos}, {elapsed:.2f} s",
    )


def test_criterion_8_cavity_checks():
    fsr = 2 * math.pi * 1e8
    base = dict(omega0=2 * math.pi * 2e14, omega_fsr=fsr)
    comm_vs_expected = [
        (CavityConfig(omega_bar=3 * fsr, f=3, **base), True),
        (CavityConfig(omega_bar=3.5 * fsr, f=3, **base), False),
        (CavityConfig(omega_bar=fsr * (1 + 1e-12), f=1, **base), True),
    ]
    comm_ok = all(validate_commensurate(c).ok is e for c, e in comm_vs_expected)
    detuning = validate_commensurate(comm_vs_expected[1][0]).value
    res_vs_expected = [
        (CavityConfig(omega_bar=3 * fsr, f=3, delta_omega=0.0, **base), True),
        (CavityConfig(omega_bar=5 * fsr, f=5, delta_omega=fsr, **base), True),
        (CavityConfig(omega_bar=2 * fsr, f=2, delta_omega=fsr, **base), False),
    ]
    res_ok = all(resolvable(c).ok is e for c, e in res_vs_expected)
    plain = CavityConfig(omega_bar=3 * fsr, f=3, **base)
    lossy = CavityConfig(omega_bar=3 * fsr, f=3, loss_per_roundtrip=0.5, **base)
    budgets = (
        max_steps(plain, 100 * plain.omega_bar, 0.5),
        max_steps(lossy, 1e9 * lossy.omega_bar, 1.0 / 1024.0),
        max_steps(plain, 0.0, 0.5),
    )
    ok = (
        comm_ok
        and abs(detuning - 0.5) < 1e-12
        and res_ok
        and budgets == (100, 10, 0)
    )
    report(
        "8 (cavity checks)",
        ok,
        f"verdicts as tabulated, detuning={detuning:.3f}, budgets={budgets}",
    )


def test_criterion_9_cli_determinism(tmp_path):
    commands = [
        ["walk", "--steps", "120"],
        ["walk", "--steps", "120", "--format", "json"],
        ["classical", "--steps", "80"],
        ["continuum", "--steps", "60"],
        ["compare", "--steps", "60"],
        ["sweep", "--n-list", "20,40,60,80"],
        ["equivalence", "--steps", "40"],
    ]
    identical = True
    for i, argv in enumerate(commands):
        a = tmp_path / f"run{i}a.dat"
        b = tmp_path / f"run{i}b.dat"
        main([*argv, "--out", str(a)])
        main([*argv, "--out", str(b)])
        identical = identical and a.read_bytes() == b.read_bytes()
    report(
        "9 (determinism)",
        identical,
        f"{len(commands)} commands re-run byte-identically",
    )
