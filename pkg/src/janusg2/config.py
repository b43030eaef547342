"""CLI configuration: built-in defaults < environment < config file < flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

ENV_OUTDIR = "JANUSG2_OUTDIR"

_CASTS = {
    "norm_tol": float,
    "oracle_tol": float,
    "tail_target": float,
    "outdir": str,
    "format": str,
}


@dataclass
class CliConfig:
    norm_tol: float = 1e-10
    oracle_tol: float = 1e-8
    tail_target: float = 1e-12
    outdir: str = "."
    format: str = "csv"

    def __post_init__(self):
        for name in ("norm_tol", "oracle_tol", "tail_target"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be > 0")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")

    def resolve_out(self, filename: str) -> Path:
        out = Path(self.outdir)
        out.mkdir(parents=True, exist_ok=True)
        return out / filename


def parse_config_file(path) -> dict:
    """Read ``key = value`` lines; '#' starts a comment; unknown keys are rejected."""
    overrides = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not sep or not key or not value:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw.rstrip()!r}")
            if key not in _CASTS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            overrides[key] = _CASTS[key](value)
    return overrides


def load_config(path=None, **flag_overrides) -> CliConfig:
    """Assemble the effective configuration.

    Precedence (lowest to highest): dataclass defaults, the JANUSG2_OUTDIR
    environment variable, the config file, explicit flags.
    """
    settings = {}
    env_outdir = os.environ.get(ENV_OUTDIR)
    if env_outdir:
        settings["outdir"] = env_outdir
    if path is not None:
        settings.update(parse_config_file(path))
    for key, value in flag_overrides.items():
        if value is not None:
            if key not in {f.name for f in fields(CliConfig)}:
                raise ValueError(f"unknown config override {key!r}")
            settings[key] = value
    return CliConfig(**settings)
