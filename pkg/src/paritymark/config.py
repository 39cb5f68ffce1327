"""Toolkit configuration, loadable from JSON and overridable from the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any

from .codec import BCH421, HAM74
from .rules import DEFAULT_SUFFIXES


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ToolkitConfig:
    alpha: int = 3
    tau: int = 2
    code_id: str = BCH421
    enabled_rules: int = 0b111111
    suffixes: tuple[str, ...] = DEFAULT_SUFFIXES
    retry_budget: int = 16
    registry_path: str | None = None
    seed: int = 0
    # group threshold used by the renaming channel, whose groups are also of three
    natural_tau: int = 2

    def __post_init__(self):
        if self.code_id not in (BCH421, HAM74):
            raise ConfigError(f"code_id must be {BCH421} or {HAM74}, got {self.code_id!r}")
        if not 1 <= self.tau <= self.alpha:
            raise ConfigError(f"need 1 <= tau <= alpha, got tau={self.tau}, alpha={self.alpha}")
        if not 1 <= self.natural_tau <= 3:
            raise ConfigError("natural_tau must be between 1 and 3")
        if self.retry_budget < 1:
            raise ConfigError("retry_budget must be positive")
        if not 0 <= self.enabled_rules < 64:
            raise ConfigError("enabled_rules is a 6-bit mask")
        if len(self.suffixes) != len(DEFAULT_SUFFIXES):
            raise ConfigError(f"suffix table needs {len(DEFAULT_SUFFIXES)} entries")
        object.__setattr__(self, "suffixes", tuple(self.suffixes))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ToolkitConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | Path) -> "ToolkitConfig":
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["suffixes"] = list(self.suffixes)
        return d

    def override(self, **changes: Any) -> "ToolkitConfig":
        """Copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
