"""Organisation profiles and their secret parity-check matrices.

Matrices are never stored: each one is regenerated from the org's seed and
the requested shape, so embedding and detection always agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from . import parity


class RegistryError(ValueError):
    pass


def unit_matrix(l: int) -> np.ndarray:
    return np.eye(l, dtype=np.uint8)


def _fully_feasible(M: np.ndarray, alpha: int, tau: int) -> bool:
    """Every threshold pattern has a solution, and the zero pattern a nonzero one."""
    l = M.shape[0]
    groups = parity.consecutive_groups(l, alpha)
    for bits in product((0, 1), repeat=l):
        count = parity.count_solutions(M, bits, groups, tau)
        if count < (2 if not any(bits) else 1):
            return False
    return True


@dataclass
class OrganizationProfile:
    org_id: str
    seed: int
    fixed_code: str = "01"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self.fixed_code or set(self.fixed_code) - {"0", "1"} or "1" not in self.fixed_code:
            raise RegistryError(f"fixed code {self.fixed_code!r} must be a nonzero bitstring")
        if not 0 <= int(self.seed) < 2**64:
            raise RegistryError("seed must fit in 64 unsigned bits")

    def matrix_for(self, l: int, alpha: int, tau: int | None = None) -> np.ndarray:
        """Full-rank ``l x l*alpha`` matrix, deterministic in (seed, l, alpha, tau).

        With ``tau`` given, generation also rejects matrices under which some
        threshold pattern has no solution.
        """
        if l < 1 or alpha < 1:
            raise ValueError("l and alpha must be positive")
        key = (l, alpha, tau)
        if key not in self._cache:
            attempt = 0
            while True:
                rng = np.random.default_rng([int(self.seed), l, alpha, tau or 0, attempt])
                M = rng.integers(0, 2, size=(l, l * alpha), dtype=np.uint8)
                if parity.gf2_rank(M) == l and (tau is None or _fully_feasible(M, alpha, tau)):
                    break
                attempt += 1
            M.setflags(write=False)
            self._cache[key] = M
        return self._cache[key]

    def to_dict(self) -> dict:
        return {"id": self.org_id, "seed": int(self.seed), "fixed_code": self.fixed_code}


class Registry:
    def __init__(self, orgs: Iterable[OrganizationProfile] = ()):
        self._orgs: dict[str, OrganizationProfile] = {}
        for org in orgs:
            self.add(org)

    def add(self, org: OrganizationProfile, replace: bool = False) -> None:
        if org.org_id in self._orgs and not replace:
            existing = self._orgs[org.org_id]
            if existing.to_dict() != org.to_dict():
                raise RegistryError(f"org {org.org_id!r} already registered")
        self._orgs[org.org_id] = org

    def get(self, org_id: str) -> OrganizationProfile:
        try:
            return self._orgs[org_id]
        except KeyError:
            raise RegistryError(f"unknown org {org_id!r}") from None

    def __iter__(self):
        return iter(self._orgs.values())

    def __len__(self):
        return len(self._orgs)

    def __contains__(self, org_id: str) -> bool:
        return org_id in self._orgs

    def ids(self) -> list[str]:
        return list(self._orgs)

    def to_json(self) -> str:
        return json.dumps({"orgs": [o.to_dict() for o in self]}, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Registry":
        data = json.loads(text)
        try:
            return cls(OrganizationProfile(o["id"], int(o["seed"]), o.get("fixed_code", "01"))
                       for o in data["orgs"])
        except (KeyError, TypeError) as exc:
            raise RegistryError(f"malformed registry: {exc}") from None

    @classmethod
    def load(cls, path: str | Path) -> "Registry":
        return cls.from_json(Path(path).read_text())

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def demo(cls, count: int = 3) -> "Registry":
        """Small fixed registry (O1, O2, ...) used by the harness and examples."""
        codes = ["01", "10", "11"]
        return cls(OrganizationProfile(f"O{i + 1}", 1000 + 7919 * i,
                                       codes[i % 3] if count <= 3 else format(i + 1, "04b"))
                   for i in range(count))


def attribute(verified: Mapping[str, int]) -> str | tuple[str, ...] | None:
    """Pick the org with the most verifying channels.

    ``verified`` maps org id to how many channels verified under it. A single
    leader is returned as a string, a tie as a sorted tuple, nothing as None.
    """
    best = max(verified.values(), default=0)
    if best == 0:
        return None
    leaders = sorted(k for k, v in verified.items() if v == best)
    return leaders[0] if len(leaders) == 1 else tuple(leaders)
