"""Run configuration: defaults, optional JSON config file, command-line overrides."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from .complex import DEFAULT_SIMPLEX_CAP
from .errors import ExitCode, SenError


class ConfigError(SenError):
    exit_code = ExitCode.USAGE


@dataclass(frozen=True)
class RunConfig:
    simplex_cap: int = DEFAULT_SIMPLEX_CAP
    strict_kinds: bool = True
    witness_limit: int = 10
    output_dir: Path = Path("out")

    def __post_init__(self) -> None:
        if self.simplex_cap < 2:
            raise ConfigError(f"simplex_cap must be at least 2, got {self.simplex_cap}")
        if self.witness_limit < 1:
            raise ConfigError(f"witness_limit must be at least 1, got {self.witness_limit}")
        object.__setattr__(self, "output_dir", Path(self.output_dir))

    def with_overrides(self, **overrides: Any) -> RunConfig:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def load_config(path: str | Path | None) -> RunConfig:
    """Read a JSON object whose keys are RunConfig field names; no path gives the defaults."""
    if path is None:
        return RunConfig()
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError(f"config {path} must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    return RunConfig(**data)
