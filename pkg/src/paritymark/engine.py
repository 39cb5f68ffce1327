"""Watermark insertion and extraction over the formal and natural channels."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import codec, parity
from .anchors import FORMAL, NATURAL, NATURAL_GROUP, AnchorIndex, apply_states, identify_anchors
from .config import ToolkitConfig
from .orgs import OrganizationProfile, Registry, attribute, unit_matrix
from .rules import formal_rule_set
from .source_model import SubjectProgram, parse

CASE1, CASE2, CASE3, NONE = "Case1-BCH", "Case2-RawMessage", "Case3-OrgFixed", "Unwatermarkable"
LADDER = (CASE1, CASE2, CASE3)
CHANNELS = (FORMAL, NATURAL)


class ChannelSkipped(Exception):
    def __init__(self, channel: str, reason: str):
        super().__init__(f"{channel}: {reason}")
        self.channel, self.reason = channel, reason


@dataclass(frozen=True)
class CapacityCase:
    case: str
    l: int = 0
    alpha: int = 0
    tau: int = 0
    q: int = 0

    @property
    def width(self) -> int:
        """Number of anchors the grouped vector covers."""
        return self.q * self.alpha


def estimate_capacity(n: int, code_id: str, alpha: int, tau: int,
                      fixed_len: int = 2, floor: str = CASE1) -> CapacityCase:
    """Best case that ``n`` anchors support, starting no higher than ``floor``."""
    p = codec.params(code_id)
    start = LADDER.index(floor)
    if start <= 0 and n >= alpha * p.length:
        return CapacityCase(CASE1, p.length, alpha, tau, p.length)
    if start <= 1 and n >= alpha * p.message_length:
        return CapacityCase(CASE2, p.message_length, alpha, tau, p.message_length)
    if n >= fixed_len:
        return CapacityCase(CASE3, fixed_len, 1, 1, fixed_len)
    return CapacityCase(NONE)


def _next_case(case: str) -> str | None:
    i = LADDER.index(case)
    return LADDER[i + 1] if i + 1 < len(LADDER) else None


@dataclass
class ChannelReport:
    channel: str
    detected: bool = False
    case: str = NONE
    w: str | None = None
    m: str | None = None
    anchors: int = 0
    resamples: int = 0
    skipped: str | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class WatermarkReport:
    formal: ChannelReport
    natural: ChannelReport
    org: str | None = None
    attribution: str | tuple[str, ...] | None = None
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def combined(self) -> bool:
        return self.formal.detected or self.natural.detected

    @property
    def strict(self) -> bool:
        return self.formal.detected and self.natural.detected

    def channel(self, name: str) -> ChannelReport:
        return self.formal if name == FORMAL else self.natural

    def to_dict(self) -> dict[str, Any]:
        attribution = self.attribution
        if isinstance(attribution, str):
            attribution = [attribution]
        elif attribution is not None:
            attribution = list(attribution)
        return {
            "schema": 1,
            "org": self.org,
            "formal": self.formal.to_dict(),
            "natural": self.natural.to_dict(),
            "combined": self.combined,
            "strict": self.strict,
            "attribution": attribution or [],
            "diagnostics": self.diagnostics,
        }


def _channel_params(channel: str, config: ToolkitConfig) -> tuple[int, int]:
    if channel == FORMAL:
        return config.alpha, config.tau
    return NATURAL_GROUP, config.natural_tau


def _matrix(cap: CapacityCase, org: OrganizationProfile) -> np.ndarray:
    if cap.case == CASE3:
        return unit_matrix(cap.l)
    return org.matrix_for(cap.l, cap.alpha, cap.tau)


def _index(program: SubjectProgram, config: ToolkitConfig) -> AnchorIndex:
    return identify_anchors(program, formal_rule_set(config.enabled_rules), config.suffixes)


def _plan_channel(channel: str, n: int, message: str, org: OrganizationProfile,
                  config: ToolkitConfig, rng: np.random.Generator
                  ) -> tuple[ChannelReport, CapacityCase, str | None]:
    """Choose a case, a watermark sequence and a state vector for one channel."""
    alpha, tau = _channel_params(channel, config)
    report = ChannelReport(channel, anchors=n)
    floor: str | None = CASE1
    while floor is not None:
        cap = estimate_capacity(n, config.code_id, alpha, tau, len(org.fixed_code), floor)
        if cap.case == NONE:
            break
        M = _matrix(cap, org)
        groups = parity.consecutive_groups(cap.q, cap.alpha)
        # only Case 1 draws w at random; the other cases have a single candidate
        attempts = config.retry_budget if cap.case == CASE1 else 1
        for _ in range(attempts):
            if cap.case == CASE1:
                w = codec.sample_watermark(message, config.code_id, rng)
            else:
                w = message if cap.case == CASE2 else org.fixed_code
            try:
                r = parity.solve_constrained(M, w, groups, cap.tau, rng, nonzero=True)
            except parity.Infeasible:
                report.resamples += 1
                continue
            report.detected, report.case, report.w = True, cap.case, w
            report.m = message if cap.case != CASE3 else None
            return report, cap, r
        floor = _next_case(cap.case)
    report.skipped = str(ChannelSkipped(channel, f"{n} anchors cannot carry a watermark"))
    return report, CapacityCase(NONE), None


def insert(program: SubjectProgram | str, message: str, org: OrganizationProfile,
           config: ToolkitConfig | None = None,
           rng: np.random.Generator | None = None) -> tuple[SubjectProgram, WatermarkReport]:
    """Embed ``message`` in both channels; the report says what went where."""
    config = config or ToolkitConfig()
    rng = rng if rng is not None else np.random.default_rng(config.seed)
    if isinstance(program, str):
        program = parse(program)
    k = codec.params(config.code_id).message_length
    if len(message) != k or set(message) - {"0", "1"}:
        raise codec.LengthMismatch(f"message must be {k} bits for {config.code_id}")

    current = program
    reports, plans = {}, {}
    for channel in CHANNELS:
        # natural anchors are found after the formal rewrite, exactly as detection will
        index = _index(current, config)
        report, cap, r = _plan_channel(channel, index.count(channel), message, org, config, rng)
        reports[channel], plans[channel] = report, (cap, r)
        if r is None:
            continue
        targets = {i: int(b) for i, b in enumerate(r)}
        if channel == FORMAL:
            current = apply_states(current, index, formal_states=targets, suffixes=config.suffixes)
        else:
            current = apply_states(current, index, natural_states=targets, suffixes=config.suffixes)

    final = _index(current, config)
    for channel, (cap, r) in plans.items():
        if r is None:
            continue
        got = "".join(map(str, final.states(channel)[:cap.width]))
        if got != r or final.count(channel) != reports[channel].anchors:
            raise AssertionError(f"{channel} channel did not take its states: {got} != {r}")
    report = WatermarkReport(reports[FORMAL], reports[NATURAL], org=org.org_id,
                             attribution=org.org_id)
    return current, report


def _check_channel(channel: str, states: list[int], org: OrganizationProfile,
                   config: ToolkitConfig) -> ChannelReport:
    alpha, tau = _channel_params(channel, config)
    report = ChannelReport(channel, anchors=len(states))
    cap = estimate_capacity(len(states), config.code_id, alpha, tau, len(org.fixed_code))
    report.case = cap.case
    if cap.case == NONE:
        return report
    r = states[:cap.width]
    if not any(r):
        return report
    groups = parity.consecutive_groups(cap.q, cap.alpha)
    c = parity.threshold_groups(r, groups, cap.tau)
    if not parity.verify(_matrix(cap, org), r, c):
        return report
    if cap.case == CASE1:
        try:
            report.m = codec.decode(c, config.code_id)
        except codec.InvalidWord:
            return report
    elif cap.case == CASE2:
        report.m = c
    elif c != org.fixed_code:
        return report
    report.detected, report.w = True, c
    return report


def extract(program: SubjectProgram | str, registry: Registry,
            config: ToolkitConfig | None = None, org_id: str | None = None) -> WatermarkReport:
    """Check every registered org; channels are reported for ``org_id``, else the best match."""
    config = config or ToolkitConfig()
    if isinstance(program, str):
        program = parse(program)
    index = _index(program, config)
    states = {ch: index.states(ch) for ch in CHANNELS}
    results = {org.org_id: {ch: _check_channel(ch, states[ch], org, config) for ch in CHANNELS}
               for org in registry}
    votes = {oid: sum(rep.detected for rep in res.values()) for oid, res in results.items()}
    attributed = attribute(votes)
    shown = org_id
    if shown is None and attributed is not None:
        shown = attributed if isinstance(attributed, str) else attributed[0]
    if shown is not None and shown not in results:
        registry.get(shown)  # raises the unknown-org error
    if shown is None:
        # nothing verified: report anchor counts only
        first = next(iter(results.values()), {})
        reps = {ch: ChannelReport(ch, case=first[ch].case if first else NONE,
                                  anchors=len(states[ch])) for ch in CHANNELS}
    else:
        reps = results[shown]
    return WatermarkReport(reps[FORMAL], reps[NATURAL], org=shown, attribution=attributed,
                           diagnostics={"votes": votes,
                                        "anchors": {ch: len(states[ch]) for ch in CHANNELS}})
