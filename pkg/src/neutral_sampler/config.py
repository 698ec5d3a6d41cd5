"""Run configuration: precision, caps, output format and seed."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

PRECISION_ENV_VAR = "NEUTRAL_SAMPLER_PRECISION"


@dataclass
class RunConfig:
    precision_bits: int = 256
    max_n: int = 8
    max_atoms: int = 10
    output_format: str = "json"
    seed: int = 20260824

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64, got %d"
                             % self.precision_bits)
        if self.max_n < 1 or self.max_atoms < 1:
            raise ValueError("caps must be positive")
        if self.output_format not in ("json", "csv"):
            raise ValueError("output_format must be json or csv")


_INT_KEYS = ("precision_bits", "max_n", "max_atoms", "seed")


def load_config(path: str | None = None, overrides: dict | None = None) -> RunConfig:
    """Build a RunConfig from defaults, env, an optional key=value file and
    explicit overrides (in increasing priority)."""
    values: dict = {}
    env_prec = os.environ.get(PRECISION_ENV_VAR)
    if env_prec:
        values["precision_bits"] = int(env_prec)
    if path:
        with open(path) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ValueError("bad config line: %r" % line)
                key, _, val = line.partition("=")
                key, val = key.strip(), val.strip().strip('"')
                if key in _INT_KEYS:
                    values[key] = int(val)
                elif key == "output_format":
                    values[key] = val
                else:
                    raise ValueError("unknown config key: %r" % key)
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
