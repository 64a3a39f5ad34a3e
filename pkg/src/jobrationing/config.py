"""Flat ``section.key = value`` configuration files."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class ConfigError(ValueError):
    pass


KNOWN_KEYS = {
    "targets": {
        "labor_share", "beveridge_elasticity", "u_star", "theta_star", "lam", "lambda",
        "kappa", "gamma", "beta", "a_normalization",
    },
    "params": {"alpha", "eta", "mu", "kappa", "lam", "lambda", "gamma", "beta", "omega"},
    "state": {"a", "H", "theta"},
    "scenario": {"preset"},
    "sweep": {"axis", "min", "max", "steps"},
    "migration": {"m"},
    "policy": {"theta0"},
    "dynamics": {"L0", "horizon", "step"},
    "output": {"format", "path", "precision"},
}

STRING_KEYS = {"sweep.axis", "scenario.preset", "output.format", "output.path"}
INT_KEYS = {"sweep.steps", "output.precision"}


@dataclass
class Config:
    values: dict = field(default_factory=dict)

    def get(self, key, default=None):
        return self.values.get(key, default)

    def section(self, name) -> dict:
        prefix = name + "."
        return {k[len(prefix):]: v for k, v in self.values.items() if k.startswith(prefix)}

    def set(self, key, raw):
        self.values[key] = convert(key, raw)


def convert(key: str, raw):
    section, _, name = key.partition(".")
    if section not in KNOWN_KEYS or name not in KNOWN_KEYS[section]:
        raise ConfigError(f"unknown configuration key {key!r}")
    if not isinstance(raw, str):
        return raw
    if key in STRING_KEYS:
        return raw
    try:
        return int(raw) if key in INT_KEYS else float(raw)
    except ValueError:
        raise ConfigError(f"{key} expects a number, got {raw!r}") from None


def parse_config(text: str) -> Config:
    config = Config()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, value = key.strip(), value.strip()
        if "." not in key:
            raise ConfigError(f"line {lineno}: key {key!r} needs a 'section.' prefix")
        try:
            config.set(key, value)
        except ConfigError as exc:
            raise ConfigError(f"line {lineno}: {exc}") from None
    return config


def load_config(path) -> Config:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    return parse_config(text)
