"""Scenario runners that write spectrum, population and indicator data as CSV and JSON."""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from . import hilbert, model, quantifiers, spectral
from .config import ScenarioConfig
from .dynamics import HBAR_UEV_NS, DephasingConfig, evolve, evolve_2qb_dephasing

COV_COLUMNS = ["cov_1up_2down", "cov_1down_2up", "cov_1down_2down", "cov_1up_2up"]


class OutputError(OSError):
    pass


def fmt(x) -> str:
    """12 significant digits, scientific notation."""
    return f"{float(x):.11e}"


def write_csv(path: Path, config: ScenarioConfig, header, rows) -> Path:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            fh.write(f"# {config.summary()}\n")
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([v if isinstance(v, str) else fmt(v) for v in row])
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror}") from None
    return path


def read_csv(path) -> tuple[str, list[str], np.ndarray]:
    """Read back a numeric CSV written by this module: (comment, header, data)."""
    with open(path, encoding="utf-8") as fh:
        comment = fh.readline().rstrip("\n")
        rows = list(csv.reader(fh))
    return comment, rows[0], np.array(rows[1:], dtype=float)


def omega_for(config: ScenarioConfig, H=None) -> float:
    """Angular frequency converting theta to time for the full model."""
    if config.time_axis == "effective":
        return abs(model.effective_coupling(config.params))
    if H is None:
        H = model.build_hamiltonian(config.params)
    return spectral.anticrossing_half_gap(H)


def _time_columns(config, traj):
    cols = {"theta_over_pi": traj.thetas / np.pi, "t_hbar_per_Jp": traj.times}
    if config.Jp_ueV is not None:
        cols["t_ns"] = traj.times * HBAR_UEV_NS / config.Jp_ueV
    return cols


def _full_trajectory(config):
    H = model.build_hamiltonian(config.params)
    rho0 = hilbert.pure_state(hilbert.basis_ket(config.initial_state))
    return evolve(
        rho0, H, config.drains.channels(), config.thetas(), omega_for(config, H),
        method=config.method,
    )


def _columns_to_rows(cols: dict):
    return list(cols), zip(*cols.values())


def _prepare(out_dir) -> Path:
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OutputError(f"cannot create output directory {out}: {exc.strerror}") from None
    return out


def run_spectrum(config: ScenarioConfig, out: Path) -> list[Path]:
    report = spectral.analyze(model.build_hamiltonian(config.params))
    doc = {
        "version": config.summary().split(" scenario=")[0],
        "parameters": {k: getattr(config.params, k) for k in ("delta1", "delta2", "J", "Jp", "Delta", "gamma")},
        "energy_unit": "Jp",
        "basis_labels": [hilbert.basis_label(i) for i in range(hilbert.DIM)],
        **report.to_dict(),
        "groups": spectral.groups(report.labels),
    }
    json_path = out / "spectrum.json"
    try:
        json_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {json_path}: {exc.strerror}") from None
    rows = [
        [str(n), report.energies[n], *report.covariances[n], report.labels[n]]
        for n in range(len(report.energies))
    ]
    table = write_csv(out / "covariance_table.csv", config, ["eigenstate", "energy", *COV_COLUMNS, "label"], rows)
    return [json_path, table]


def run_evolve(config: ScenarioConfig, out: Path) -> list[Path]:
    traj = _full_trajectory(config)
    cols = _time_columns(config, traj)
    pops = traj.populations
    for i in range(hilbert.DIM):
        cols[f"P{i}"] = pops[:, i]
    if config.initial_state in (6, 9):
        start = np.cos(traj.thetas) ** 2
        other = 9 if config.initial_state == 6 else 6
        cols[f"P{config.initial_state}_eff"] = start
        cols[f"P{other}_eff"] = 1 - start
    cols["trace"] = traj.traces
    header, rows = _columns_to_rows(cols)
    return [write_csv(out / "populations.csv", config, header, rows)]


def _concurrence_eff(thetas):
    states = [model.analytic_state(t) for t in thetas]
    rhos = []
    for amp in states:
        ket = np.zeros(4, dtype=complex)
        ket[[1, 2]] = amp
        rhos.append(np.outer(ket, ket.conj()))
    return np.array([quantifiers.concurrence(r) for r in rhos])


def run_indicators(config: ScenarioConfig, out: Path) -> list[Path]:
    traj = _full_trajectory(config)
    ind = [quantifiers.indicators(r) for r in traj.states]
    projected = traj.map(quantifiers.concurrence_full)
    cols = _time_columns(config, traj)
    cols.update(
        qmi_scaled=[i.qmi_scaled for i in ind],
        neg_scaled=[i.neg_scaled for i in ind],
        svne=[i.svne for i in ind],
        tei=[i.tei for i in ind],
        covariance=[i.covariances[0] for i in ind],
        concurrence_eff=_concurrence_eff(traj.thetas),
        concurrence_projected=projected[:, 0],
        projection_weight=projected[:, 1],
    )
    header, rows = _columns_to_rows(cols)
    return [write_csv(out / "indicators.csv", config, header, rows)]


def run_covariance(config: ScenarioConfig, out: Path) -> list[Path]:
    traj = _full_trajectory(config)
    cols = _time_columns(config, traj)
    cols.update(
        covariance=traj.map(lambda r: quantifiers.covariance(r, "up", "down")),
        covariance_eff=quantifiers.covariance_analytic(traj.thetas),
        qmi_scaled=traj.map(quantifiers.qmi) / 2,
        concurrence_eff=_concurrence_eff(traj.thetas),
    )
    header, rows = _columns_to_rows(cols)
    return [write_csv(out / "covariance.csv", config, header, rows)]


def dephasing_trajectory(config: ScenarioConfig, rate: float):
    p = config.params
    H2 = model.build_2qb_hamiltonian(p, simplified=config.simplified_2qb)
    deph = DephasingConfig(rate, unit=config.dephasing_unit, Jp_ueV=config.Jp_ueV)
    rho0 = np.zeros((4, 4), dtype=complex)
    rho0[1, 1] = 1.0
    omega = abs(model.effective_coupling(p))
    return evolve_2qb_dephasing(rho0, H2, deph, config.thetas(), omega, method=config.method)


def _rate_tag(rate: float, unit: str) -> str:
    return f"{rate:g}{'GHz' if unit == 'per_ns' else 'Jp'}"


def run_dephasing_sweep(config: ScenarioConfig, out: Path) -> list[Path]:
    paths = []
    for rate in config.dephasing_rates:
        traj = dephasing_trajectory(config, rate)
        cols = _time_columns(config, traj)
        cols.update(
            concurrence=traj.map(quantifiers.concurrence),
            covariance=traj.map(lambda r: quantifiers.covariance(model.embed_2qb(r), "up", "down")),
            P01=traj.populations[:, 1],
            P10=traj.populations[:, 2],
        )
        header, rows = _columns_to_rows(cols)
        name = f"dephasing_{_rate_tag(rate, config.dephasing_unit)}.csv"
        paths.append(write_csv(out / name, config, header, rows))
    return paths


RUNNERS = {
    "spectrum": run_spectrum,
    "evolve": run_evolve,
    "indicators": run_indicators,
    "covariance": run_covariance,
    "dephasing-sweep": run_dephasing_sweep,
}


def run_scenario(config: ScenarioConfig, out_dir=None) -> list[Path]:
    """Run ``config.scenario`` and return the paths of the files written."""
    out = _prepare(out_dir if out_dir is not None else config.out)
    return RUNNERS[config.scenario](config, out)
