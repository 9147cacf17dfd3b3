"""Scenario configuration: a strict ``[section]`` / ``key = value`` text format.

Grammar, one construct per line::

    # comment            (also ';'; blank lines are ignored)
    [section]
    key = value          (whitespace around '=' is ignored)

Keys are case-sensitive, each key may appear once, and keys outside the
table below are rejected.  Every error carries the line and column where it
was detected.

    [model]     delta1 delta2 J Jp Delta gamma        (units of J')
    [drains]    Gamma1 Gamma2                          (units of J')
    [dephasing] rates (comma separated) unit (per_ns | Jp) simplified (true | false)
    [theta]     start_over_pi stop_over_pi count
    [units]     Jp_ueV                                 (J' in micro-eV, or "none")
    [run]       initial_state time_axis (spectral | effective) method (expm | rk) out
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .dynamics import DrainRates
from .model import DegenerateParameterError, ModelParams, effective_model

SCENARIOS = ("spectrum", "evolve", "indicators", "covariance", "dephasing-sweep")


class ConfigError(ValueError):
    def __init__(self, message: str, source: str = "<config>", line: int = 0, col: int = 0):
        self.message = message
        self.source = source
        self.line = line
        self.col = col
        super().__init__(f"{source}:{line}:{col}: {message}")


class ParameterError(ConfigError):
    """Well-formed config whose values fall outside the valid domain."""


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str = "evolve"
    params: ModelParams = field(default_factory=ModelParams)
    drains: DrainRates = field(default_factory=DrainRates)
    dephasing_rates: tuple[float, ...] = (0.01, 0.1, 1.0)
    dephasing_unit: str = "per_ns"
    simplified_2qb: bool = True
    theta_start_over_pi: float = 0.0
    theta_stop_over_pi: float = 1.0
    theta_count: int = 1001
    Jp_ueV: float | None = 100.0
    initial_state: int = 9
    time_axis: str = "spectral"
    method: str = "expm"
    out: str = "out"

    def thetas(self) -> np.ndarray:
        return np.pi * np.linspace(
            self.theta_start_over_pi, self.theta_stop_over_pi, self.theta_count
        )

    def summary(self) -> str:
        """One-line record of every parameter, used as the CSV comment line."""
        parts = [f"cpbs {__version__}", f"scenario={self.scenario}"]
        parts += [f"{k}={v!r}" for k, v in dataclasses.asdict(self.params).items()]
        parts += [f"{k}={v!r}" for k, v in dataclasses.asdict(self.drains).items()]
        for f in dataclasses.fields(self):
            if f.name not in ("scenario", "params", "drains", "out"):
                parts.append(f"{f.name}={getattr(self, f.name)!r}")
        return " ".join(parts)


def default_benchmark(scenario: str = "evolve") -> ScenarioConfig:
    """Benchmark parameters: Delta=0.05, gamma=0.005, J=4, delta1=delta2=0.5 (units of J')."""
    return ScenarioConfig(scenario=scenario)


def _float(text):
    value = float(text)
    if not np.isfinite(value):
        raise ValueError("must be finite")
    return value


def _optional_float(text):
    return None if text.strip().lower() == "none" else _float(text)


def _int(text):
    return int(text, 10)


def _bool(text):
    lowered = text.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError("expected true or false")


def _floats(text):
    items = [t.strip() for t in text.split(",")]
    if not items or any(not t for t in items):
        raise ValueError("expected a comma-separated list of numbers")
    return tuple(_float(t) for t in items)


def _choice(*options):
    def parse(text):
        if text not in options:
            raise ValueError(f"expected one of {', '.join(options)}")
        return text

    return parse


# (section, key) -> (ScenarioConfig target, converter); "params."/"drains." go to nested objects
SCHEMA = {
    ("model", "delta1"): ("params.delta1", _float),
    ("model", "delta2"): ("params.delta2", _float),
    ("model", "J"): ("params.J", _float),
    ("model", "Jp"): ("params.Jp", _float),
    ("model", "Delta"): ("params.Delta", _float),
    ("model", "gamma"): ("params.gamma", _float),
    ("drains", "Gamma1"): ("drains.Gamma1", _float),
    ("drains", "Gamma2"): ("drains.Gamma2", _float),
    ("dephasing", "rates"): ("dephasing_rates", _floats),
    ("dephasing", "unit"): ("dephasing_unit", _choice("per_ns", "Jp")),
    ("dephasing", "simplified"): ("simplified_2qb", _bool),
    ("theta", "start_over_pi"): ("theta_start_over_pi", _float),
    ("theta", "stop_over_pi"): ("theta_stop_over_pi", _float),
    ("theta", "count"): ("theta_count", _int),
    ("units", "Jp_ueV"): ("Jp_ueV", _optional_float),
    ("run", "initial_state"): ("initial_state", _int),
    ("run", "time_axis"): ("time_axis", _choice("spectral", "effective")),
    ("run", "method"): ("method", _choice("expm", "rk")),
    ("run", "out"): ("out", str),
}
SECTIONS = sorted({s for s, _ in SCHEMA})


@dataclass
class _Entry:
    value: str
    source: str
    line: int
    col: int


def parse_text(text: str, source: str = "<config>") -> dict[tuple[str, str], _Entry]:
    """Tokenise config text into ``{(section, key): entry}`` with positions."""
    entries: dict[tuple[str, str], _Entry] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        indent = len(raw) - len(raw.lstrip()) + 1
        if not stripped or stripped[0] in "#;":
            continue
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ConfigError("unterminated section header", source, lineno, len(raw) + 1)
            section = stripped[1:-1].strip()
            if section not in SECTIONS:
                raise ConfigError(f"unknown section [{section}]", source, lineno, indent)
            continue
        if "=" not in stripped:
            raise ConfigError("expected 'key = value'", source, lineno, indent)
        if section is None:
            raise ConfigError("key outside of any [section]", source, lineno, indent)
        key, _, value = stripped.partition("=")
        key = key.strip()
        value_col = raw.index("=") + 2 + (len(value) - len(value.lstrip()))
        if (section, key) not in SCHEMA:
            raise ConfigError(f"unknown key '{key}' in [{section}]", source, lineno, indent)
        if (section, key) in entries:
            first = entries[(section, key)]
            raise ConfigError(
                f"duplicate key '{key}' (first set on line {first.line})", source, lineno, indent
            )
        entries[(section, key)] = _Entry(value.strip(), source, lineno, value_col)
    return entries


def parse_override(assignment: str, position: int = 1) -> tuple[tuple[str, str], _Entry]:
    """Parse a ``section.key=value`` command-line override."""
    source = f"--set[{position}]"
    name, sep, value = assignment.partition("=")
    if not sep or "." not in name:
        raise ConfigError("expected section.key=value", source, 1, 1)
    section, _, key = name.strip().partition(".")
    if (section, key) not in SCHEMA:
        raise ConfigError(f"unknown key '{key}' in [{section}]", source, 1, 1)
    return (section, key), _Entry(value.strip(), source, 1, len(name) + 2)


def build_config(scenario: str, entries: dict, base: ScenarioConfig | None = None) -> ScenarioConfig:
    """Apply parsed entries on top of ``base`` (default: the benchmark) and validate."""
    if scenario not in SCENARIOS:
        raise ConfigError(f"unknown scenario '{scenario}'; expected one of {', '.join(SCENARIOS)}",
                          "<args>", 1, 1)
    base = base or default_benchmark(scenario)
    top: dict = {"scenario": scenario}
    nested = {"params": dataclasses.asdict(base.params), "drains": dataclasses.asdict(base.drains)}
    for key, entry in entries.items():
        target, convert = SCHEMA[key]
        try:
            value = convert(entry.value)
        except ValueError as exc:
            raise ConfigError(
                f"bad value {entry.value!r} for {key[0]}.{key[1]}: {exc}",
                entry.source, entry.line, entry.col,
            ) from None
        if "." in target:
            group, attr = target.split(".")
            nested[group][attr] = value
        else:
            top[target] = value

    def fail(message, *keys):
        entry = next((entries[k] for k in keys if k in entries), None)
        if entry is None:
            raise ParameterError(message)
        raise ParameterError(message, entry.source, entry.line, entry.col)

    try:
        params = ModelParams(**nested["params"])
    except ValueError as exc:
        fail(str(exc), *[k for k in SCHEMA if k[0] == "model"])
    if params.Jp <= 0:
        fail("Jp must be positive", ("model", "Jp"))
    try:
        effective_model(params)
    except DegenerateParameterError as exc:
        fail(str(exc), ("model", "J"), ("model", "Jp"))
    try:
        drains = DrainRates(**nested["drains"])
    except ValueError as exc:
        fail(str(exc), ("drains", "Gamma1"), ("drains", "Gamma2"))

    cfg = dataclasses.replace(base, params=params, drains=drains, **top)
    if cfg.theta_count < 2:
        fail("theta count must be at least 2", ("theta", "count"))
    if not 0 <= cfg.theta_start_over_pi < cfg.theta_stop_over_pi:
        fail("theta grid needs 0 <= start < stop", ("theta", "start_over_pi"), ("theta", "stop_over_pi"))
    if cfg.theta_start_over_pi != 0:
        # propagation starts from the initial state at theta = 0
        fail("theta grid must start at 0", ("theta", "start_over_pi"))
    if any(r < 0 for r in cfg.dephasing_rates):
        fail("dephasing rates must be non-negative", ("dephasing", "rates"))
    if not 0 <= cfg.initial_state < 16:
        fail("initial_state must be a basis index 0..15", ("run", "initial_state"))
    if cfg.Jp_ueV is not None and cfg.Jp_ueV <= 0:
        fail("Jp_ueV must be positive", ("units", "Jp_ueV"))
    if scenario == "dephasing-sweep" and cfg.dephasing_unit == "per_ns" and cfg.Jp_ueV is None:
        fail("dephasing rates in 1/ns need [units] Jp_ueV", ("dephasing", "unit"), ("units", "Jp_ueV"))
    return cfg


def load_config(scenario: str, path=None, overrides=()) -> ScenarioConfig:
    """Read a config file (optional), apply ``section.key=value`` overrides, validate."""
    entries = {}
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc.strerror}", str(path), 0, 0) from None
        entries = parse_text(text, str(path))
    for i, assignment in enumerate(overrides, start=1):
        key, entry = parse_override(assignment, i)
        entries[key] = entry
    return build_config(scenario, entries)
