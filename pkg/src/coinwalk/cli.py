"""Command-line experiment runner.

Subcommands reproduce the standard experiments (walk and classical
distributions, continuum intensity, the three-way comparison, spreading
sweeps, decoupling equivalence, cavity feasibility) and emit deterministic
CSV or JSON tables.  Exit codes: 0 success, 1 physics-check failure,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from coinwalk import continuum, decoupled, optical, output, walk

EQUIVALENCE_THRESHOLD = 1e-12
DEFAULT_SWEEP = tuple(range(50, 201, 10))

USAGE_ERROR = 2
CHECK_FAILED = 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    steps: int = 200
    initial: tuple[complex, complex] = (walk.SQRT1_2, 1j * walk.SQRT1_2)
    coin: str = "hadamard"
    alpha: float = 0.4
    out: str | None = None
    format: str = "csv"
    all_sites: bool = False
    n_list: tuple[int, ...] = DEFAULT_SWEEP
    perturb: float = 0.0
    cavity: optical.CavityConfig | None = None
    eom_bandwidth: float | None = None
    intensity_floor: float = 1e-3


class ConfigError(ValueError):
    """Bad flag or config-file content (exit code 2)."""


def _coin_matrix(name: str) -> np.ndarray:
    if name == "hadamard":
        return walk.hadamard_coin()
    if name.startswith("phase:"):
        try:
            return walk.phase_coin(float(name.split(":", 1)[1]))
        except ValueError as exc:
            raise ConfigError(f"bad phase coin {name!r}: {exc}") from exc
    raise ConfigError(f"unknown coin {name!r} (use 'hadamard' or 'phase:<rad>')")


def _parse_initial(text: str) -> tuple[complex, complex]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ConfigError(f"--initial needs re,im,re,im, got {text!r}")
    try:
        re_r, im_r, re_l, im_l = (float(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"bad --initial {text!r}: {exc}") from exc
    return complex(re_r, im_r), complex(re_l, im_l)


def _format_initial(initial: tuple[complex, complex]) -> str:
    r0, l0 = initial
    return ",".join(format(v, ".12g") for v in (r0.real, r0.imag, l0.real, l0.imag))


# --------------------------------------------------------------------------
# Config file: flat "key = value" lines, plus an optional [cavity] section
# (see docs/config-format.md for the schema).

_CAVITY_FLOAT_KEYS = {
    "omega0",
    "omega_bar",
    "omega_fsr",
    "delta_omega",
    "loss_per_roundtrip",
    "resolvability_factor",
}


def read_config(path: str) -> dict:
    """Parse a run-config file into {key: raw string} plus 'cavity' dict."""
    flat: dict = {}
    cavity: dict = {}
    section = None
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if name != "cavity":
                raise ConfigError(f"{path}:{lineno}: unknown section [{name}]")
            section = cavity
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {raw!r}")
        target = flat if section is None else section
        target[key.strip()] = value.strip()
    if cavity:
        flat["cavity"] = cavity
    return flat


def _cavity_from_dict(raw: dict) -> tuple[optical.CavityConfig, float | None, float]:
    try:
        cfg = optical.CavityConfig(
            f=int(raw["f"]),
            **{k: float(raw[k]) for k in _CAVITY_FLOAT_KEYS if k in raw},
        )
        bandwidth = float(raw["eom_bandwidth"]) if "eom_bandwidth" in raw else None
        floor = float(raw.get("intensity_floor", 1e-3))
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad [cavity] section: {exc}") from exc
    return cfg, bandwidth, floor


def _apply_config_file(cfg: RunConfig, path: str) -> RunConfig:
    raw = read_config(path)
    updates: dict = {}
    try:
        if "steps" in raw:
            updates["steps"] = int(raw["steps"])
        if "initial" in raw:
            updates["initial"] = _parse_initial(raw["initial"])
        if "coin" in raw:
            updates["coin"] = raw["coin"]
        if "alpha" in raw:
            updates["alpha"] = float(raw["alpha"])
        if "format" in raw:
            updates["format"] = raw["format"]
        if "out" in raw:
            updates["out"] = raw["out"]
        if "all_sites" in raw:
            updates["all_sites"] = raw["all_sites"].lower() in ("1", "true", "yes")
        if "n_list" in raw:
            updates["n_list"] = tuple(int(v) for v in raw["n_list"].split(","))
    except ValueError as exc:
        raise ConfigError(f"bad value in config {path!r}: {exc}") from exc
    if "cavity" in raw:
        cavity, bandwidth, floor = _cavity_from_dict(raw["cavity"])
        updates["cavity"] = cavity
        updates["eom_bandwidth"] = bandwidth
        updates["intensity_floor"] = floor
    if updates.get("format", cfg.format) not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {raw.get('format')!r}")
    return replace(cfg, **updates)


# --------------------------------------------------------------------------
# Commands.  Each builds a Table; the caller serializes it.


def _distribution_rows(dist: walk.Distribution, all_sites: bool) -> list[tuple]:
    rows = []
    for m, p in zip(dist.sites.tolist(), dist.p.tolist()):
        if all_sites or (m + dist.n) % 2 == 0:
            rows.append((m, p))
    return rows


def run_walk(cfg: RunConfig) -> tuple[int, output.Table]:
    state = walk.evolve(walk.new_walk(*cfg.initial), _coin_matrix(cfg.coin), cfg.steps)
    dist = walk.probability(state)
    table = output.Table(
        meta={
            "command": "walk",
            "n": cfg.steps,
            "initial": _format_initial(cfg.initial),
            "coin": cfg.coin,
            "sigma": walk.std_dev(dist),
        },
        columns=["m", "P"],
        rows=_distribution_rows(dist, cfg.all_sites),
    )
    return 0, table


def run_classical(cfg: RunConfig) -> tuple[int, output.Table]:
    dist = walk.classical_distribution(cfg.steps)
    table = output.Table(
        meta={"command": "classical", "n": cfg.steps, "sigma": walk.std_dev(dist)},
        columns=["m", "P"],
        rows=_distribution_rows(dist, cfg.all_sites),
    )
    return 0, table


def run_continuum(cfg: RunConfig) -> tuple[int, output.Table]:
    tau = float(cfg.steps)
    if tau <= continuum.TAU_MIN:
        raise ConfigError(f"continuum needs steps > {continuum.TAU_MIN:g}")
    r_params, l_params = continuum.walk_seeds(*cfg.initial, alpha=cfg.alpha)
    xi = continuum.default_grid(tau)
    r_field = continuum.continuum_solution(r_params, xi, tau, cfg.steps)
    l_field = continuum.continuum_solution(l_params, xi, tau, cfg.steps)
    intens = continuum.intensity(r_field, l_field, normalize=True)
    table = output.Table(
        meta={
            "command": "continuum",
            "tau": tau,
            "alpha": cfg.alpha,
            "initial": _format_initial(cfg.initial),
        },
        columns=["xi", "I"],
        rows=[(x, v) for x, v in zip(xi.tolist(), intens.tolist())],
    )
    return 0, table


def run_compare(cfg: RunConfig) -> tuple[int, output.Table]:
    n = cfg.steps
    if n < 2 or n % 2 != 0:
        raise ConfigError(
            f"compare needs even steps >= 2 (even-m support of all three curves), got {n}"
        )
    state = walk.evolve(walk.new_walk(*cfg.initial), _coin_matrix(cfg.coin), n)
    quantum = walk.probability(state)
    classical = walk.classical_distribution(n)
    sites = np.arange(-n, n + 1, 2)
    p_q = quantum.p[np.searchsorted(quantum.sites, sites)]
    p_c = classical.p[np.searchsorted(classical.sites, sites)]
    r_params, l_params = continuum.walk_seeds(*cfg.initial, alpha=cfg.alpha)
    # evaluate on a grid padded to the minimum field-grid length, then keep
    # the walk's own sites and normalize over those alone
    half = max(n, 16)
    xi = np.arange(-half, half + 1, 2, dtype=np.float64)
    keep = np.abs(xi) <= n
    r_field = continuum.continuum_solution(r_params, xi, float(n), n)
    l_field = continuum.continuum_solution(l_params, xi, float(n), n)
    i_cont = continuum.intensity(r_field, l_field)[keep]
    total = i_cont.sum()
    if total > 0.0:
        i_cont = i_cont / total
    table = output.Table(
        meta={
            "command": "compare",
            "n": n,
            "initial": _format_initial(cfg.initial),
            "coin": cfg.coin,
            "alpha": cfg.alpha,
            "sigma_quantum": walk.std_dev(quantum),
            "sigma_classical": walk.std_dev(classical),
        },
        columns=["m", "P_quantum", "P_classical", "I_continuum"],
        rows=[
            (int(m), q, c, i)
            for m, q, c, i in zip(sites.tolist(), p_q.tolist(), p_c.tolist(), i_cont.tolist())
        ],
    )
    return 0, table


def _sweep_row(args: tuple) -> tuple[int, float, float]:
    n, initial, coin = args
    state = walk.evolve(walk.new_walk(*initial), coin, n)
    sigma_q = walk.std_dev(walk.probability(state))
    sigma_c = walk.std_dev(walk.classical_distribution(n))
    return n, sigma_q, sigma_c


def run_sweep(cfg: RunConfig) -> tuple[int, output.Table]:
    n_list = cfg.n_list
    if not n_list or list(n_list) != sorted(n_list):
        raise ConfigError(f"sweep needs a non-empty ascending n list, got {n_list}")
    coin = _coin_matrix(cfg.coin)
    workers = os.cpu_count() or 1
    env = os.environ.get("COINWALK_THREADS")
    if env:
        try:
            workers = max(1, int(env))
        except ValueError as exc:
            raise ConfigError(f"bad COINWALK_THREADS={env!r}") from exc
    jobs = [(n, cfg.initial, coin) for n in n_list]
    with ThreadPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        rows = list(pool.map(_sweep_row, jobs))
    rows.sort(key=lambda r: r[0])
    meta = {
        "command": "sweep",
        "initial": _format_initial(cfg.initial),
        "coin": cfg.coin,
    }
    if len(rows) >= 3:
        ns = np.array([r[0] for r in rows], dtype=np.float64)
        sig = np.array([r[1] for r in rows])
        design = np.vstack([ns, np.ones_like(ns)]).T
        (slope, intercept), *_ = np.linalg.lstsq(design, sig, rcond=None)
        pred = design @ np.array([slope, intercept])
        ss_res = float(np.sum((sig - pred) ** 2))
        ss_tot = float(np.sum((sig - sig.mean()) ** 2))
        meta["fit_slope"] = float(slope)
        meta["fit_intercept"] = float(intercept)
        meta["fit_r_squared"] = 1.0 - ss_res / ss_tot if ss_tot > 0.0 else 1.0
    table = output.Table(
        meta=meta, columns=["n", "sigma_quantum", "sigma_classical"], rows=rows
    )
    return 0, table


def run_equivalence(cfg: RunConfig) -> tuple[int, output.Table]:
    if cfg.steps < 2:
        raise ConfigError(f"equivalence needs steps >= 2, got {cfg.steps}")
    deviation = decoupled.verify_equivalence(
        cfg.initial, cfg.steps, seed_perturbation=cfg.perturb
    )
    passed = deviation < EQUIVALENCE_THRESHOLD
    table = output.Table(
        meta={
            "command": "equivalence",
            "n": cfg.steps,
            "initial": _format_initial(cfg.initial),
            "threshold": EQUIVALENCE_THRESHOLD,
            "passed": passed,
        },
        columns=["max_deviation"],
        rows=[(deviation,)],
    )
    return 0 if passed else CHECK_FAILED, table


def run_cavity_check(cfg: RunConfig) -> tuple[int, output.Table]:
    if cfg.cavity is None:
        raise ConfigError("cavity-check needs a [cavity] section in --config")
    cav = cfg.cavity
    comm = optical.validate_commensurate(cav)
    res = optical.resolvable(cav)
    bandwidth = cfg.eom_bandwidth
    if bandwidth is None:
        bandwidth = 200.0 * cav.omega_bar
    budget = optical.max_steps(cav, bandwidth, cfg.intensity_floor)
    roundtrips = optical.roundtrips_per_step(cav)
    all_ok = comm.ok and res.ok
    table = output.Table(
        meta={
            "command": "cavity-check",
            "passed": all_ok,
            "step_budget": budget,
            "roundtrips_per_step": roundtrips,
        },
        columns=["check", "ok", "value", "detail"],
        rows=[
            (comm.name, int(comm.ok), comm.value, comm.detail),
            (res.name, int(res.ok), res.value, res.detail),
        ],
    )
    return 0 if all_ok else CHECK_FAILED, table


_COMMANDS = {
    "walk": run_walk,
    "classical": run_classical,
    "continuum": run_continuum,
    "compare": run_compare,
    "sweep": run_sweep,
    "equivalence": run_equivalence,
    "cavity-check": run_cavity_check,
}


# --------------------------------------------------------------------------
# Argument parsing and entry point.


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coinwalk",
        description="Coined quantum walk on the line: simulations and checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("walk", "site distribution of the coined walk"),
        ("classical", "binomial distribution of the classical walk"),
        ("continuum", "closed-form continuum intensity profile"),
        ("compare", "quantum vs classical vs continuum on one grid"),
        ("sweep", "spread sigma(n) over a list of step counts"),
        ("equivalence", "coupled vs decoupled evolution check"),
        ("cavity-check", "optical cavity feasibility report"),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--steps", type=int, default=None, help="number of walk steps")
        p.add_argument(
            "--initial",
            type=str,
            default=None,
            metavar="RE,IM,RE,IM",
            help="initial coin state amplitudes (default: symmetric superposition)",
        )
        p.add_argument(
            "--coin",
            type=str,
            default=None,
            help="coin operator: hadamard | phase:<rad>",
        )
        p.add_argument("--alpha", type=float, default=None, help="continuum seed width")
        p.add_argument("--out", type=str, default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument(
            "--all-sites",
            action="store_true",
            help="emit every site, including the empty wrong-parity ones",
        )
        p.add_argument("--config", type=str, default=None, help="run-config file")
        if name == "sweep":
            p.add_argument(
                "--n-list",
                type=str,
                default=None,
                metavar="N1,N2,...",
                help="ascending step counts (default 50..200 step 10)",
            )
        if name == "equivalence":
            p.add_argument(
                "--perturb",
                type=float,
                default=None,
                help="self-test hook: inject an amplitude error into one seed site",
            )
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config:
        cfg = _apply_config_file(cfg, args.config)
    updates: dict = {}
    if args.steps is not None:
        updates["steps"] = args.steps
    if args.initial is not None:
        updates["initial"] = _parse_initial(args.initial)
    if args.coin is not None:
        updates["coin"] = args.coin
    if args.alpha is not None:
        updates["alpha"] = args.alpha
    if args.out is not None:
        updates["out"] = args.out
    if args.format is not None:
        updates["format"] = args.format
    if args.all_sites:
        updates["all_sites"] = True
    if getattr(args, "n_list", None) is not None:
        try:
            updates["n_list"] = tuple(int(v) for v in args.n_list.split(","))
        except ValueError as exc:
            raise ConfigError(f"bad --n-list {args.n_list!r}") from exc
    if getattr(args, "perturb", None) is not None:
        updates["perturb"] = args.perturb
    return replace(cfg, **updates)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        code, table = _COMMANDS[cfg.command](cfg)
        text = output.write_json(table) if cfg.format == "json" else output.write_csv(table)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if cfg.out is None or cfg.out == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {cfg.out!r}: {exc}", file=sys.stderr)
            return USAGE_ERROR
    return code


if __name__ == "__main__":
    sys.exit(main())
