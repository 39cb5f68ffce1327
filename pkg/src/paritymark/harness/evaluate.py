"""Corpus-level evaluation: detection, fidelity, robustness, attribution, leakage."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .. import codec
from ..anchors import FORMAL, InsufficientAnchors, identify_anchors
from ..config import ToolkitConfig
from ..engine import CASE1, CHANNELS, WatermarkReport, extract, insert
from ..orgs import OrganizationProfile, Registry
from ..source_model import parse
from . import metrics
from .attacks import AttackSpec, attack
from .corpus import CorpusItem, run_tests


class EmptyCorpus(ValueError):
    pass


@dataclass
class EvalResult:
    rows: list[dict]
    summary: dict = field(default_factory=dict)

    def write(self, csv_path: str | Path, json_path: str | Path | None = None) -> None:
        write_rows(self.rows, csv_path)
        if json_path is not None:
            Path(json_path).write_text(json.dumps(self.summary, indent=2) + "\n")


def write_rows(rows: Sequence[dict], path: str | Path) -> None:
    columns: list[str] = []
    for row in rows:
        columns += [k for k in row if k not in columns]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns)
        writer.writeheader()
        writer.writerows(rows)


def _rng(seed: int, *parts: int) -> np.random.Generator:
    return np.random.default_rng([seed, *parts])


def _verdict(report: WatermarkReport) -> tuple:
    return (report.formal.detected, report.formal.m, report.natural.detected,
            report.natural.m, report.attribution)


def _messages(config: ToolkitConfig) -> list[str]:
    return codec.all_words(codec.params(config.code_id).message_length)


def _regressions(before: list[bool], after: list[bool]) -> int:
    return sum(b and not a for b, a in zip(before, after))


def evaluate(items: Sequence[CorpusItem], registry: Registry, owner: str,
             attacks: Iterable[AttackSpec] = (), config: ToolkitConfig | None = None,
             seed: int = 0) -> EvalResult:
    """Watermark every file for ``owner`` and measure detection under each attack."""
    if not items:
        raise EmptyCorpus("nothing to evaluate")
    config = config or ToolkitConfig()
    org = registry.get(owner)
    attacks = list(attacks)
    messages = _messages(config)
    rows = []
    for i, item in enumerate(items):
        program = parse(item.text, item.name)
        message = messages[i % len(messages)]
        clean = extract(program, registry, config, org_id=owner)
        marked, embed = insert(program, message, org, config, _rng(seed, i, 0))
        found = extract(marked, registry, config, org_id=owner)
        before = run_tests(item.text, item.tests)
        after = run_tests(marked.text, item.tests)
        row = {
            "file": item.name,
            "message": message,
            "formal_case": embed.formal.case,
            "natural_case": embed.natural.case,
            "formal_anchors": embed.formal.anchors,
            "natural_anchors": embed.natural.anchors,
            "watermarked": embed.combined,
            "combined": found.combined,
            "strict": found.strict,
            "formal_detected": found.formal.detected,
            "natural_detected": found.natural.detected,
            "formal_msg_ok": embed.formal.case == CASE1 and found.formal.m == message,
            "natural_msg_ok": embed.natural.case == CASE1 and found.natural.m == message,
            "clean_combined": clean.combined,
            "clean_strict": clean.strict,
            "tests": len(before),
            "tests_passing": sum(before),
            "tests_regressed": _regressions(before, after),
            "attribution": "|".join([found.attribution] if isinstance(found.attribution, str)
                                    else found.attribution or []),
        }
        for a, spec in enumerate(attacks):
            hit = attack(marked, spec, _rng(seed, i, 1 + a))
            seen = extract(hit, registry, config, org_id=owner)
            label = spec.label()
            row[f"{label}:combined"] = seen.combined
            row[f"{label}:formal"] = seen.formal.detected
            row[f"{label}:natural"] = seen.natural.detected
            row[f"{label}:same_verdict"] = _verdict(seen) == _verdict(found)
            row[f"{label}:regressed"] = _regressions(before, run_tests(hit.text, item.tests))
        rows.append(row)
    return EvalResult(rows, summarize(rows, attacks))


def summarize(rows: list[dict], attacks: Sequence[AttackSpec] = ()) -> dict:
    marked = [r for r in rows if r["watermarked"]]
    summary = {
        "files": len(rows),
        "watermarked": len(marked),
        "tpr": metrics.rate([r["combined"] for r in marked]),
        "tpr_strict": metrics.rate([r["strict"] for r in marked]),
        "fpr": metrics.rate([r["clean_combined"] for r in rows]),
        "fpr_strict": metrics.rate([r["clean_strict"] for r in rows]),
        "tests_regressed": sum(r["tests_regressed"] for r in rows),
    }
    for channel in CHANNELS:
        case1 = [r for r in rows if r[f"{channel}_case"] == CASE1]
        summary[f"msg_acc_{channel}"] = metrics.rate([r[f"{channel}_msg_ok"] for r in case1])
        summary[f"tpr_{channel}"] = metrics.rate([r[f"{channel}_detected"] for r in marked])
    for spec in attacks:
        label = spec.label()
        summary[label] = {
            "tpr": metrics.rate([r[f"{label}:combined"] for r in marked]),
            "tpr_formal": metrics.rate([r[f"{label}:formal"] for r in marked]),
            "tpr_natural": metrics.rate([r[f"{label}:natural"] for r in marked]),
            "same_verdict": metrics.rate([r[f"{label}:same_verdict"] for r in rows]),
            "tests_regressed": sum(r[f"{label}:regressed"] for r in rows),
        }
    return summary


def message_accuracy(items: Sequence[CorpusItem], org: OrganizationProfile, registry: Registry,
                     config: ToolkitConfig | None = None, seed: int = 0,
                     min_formal: int = 0) -> dict[str, tuple[int, int]]:
    """(recovered, attempted) per channel, over every message and every Case 1 channel."""
    config = config or ToolkitConfig()
    tally = {ch: [0, 0] for ch in CHANNELS}
    for i, item in enumerate(items):
        program = parse(item.text, item.name)
        if identify_anchors(program).count(FORMAL) < min_formal:
            continue
        for j, message in enumerate(_messages(config)):
            marked, embed = insert(program, message, org, config, _rng(seed, i, j))
            found = extract(marked, registry, config, org_id=org.org_id)
            for ch in CHANNELS:
                if embed.channel(ch).case == CASE1:
                    tally[ch][1] += 1
                    tally[ch][0] += found.channel(ch).m == message
    return {ch: (ok, total) for ch, (ok, total) in tally.items()}


def cross_org(items: Sequence[CorpusItem], registry: Registry,
              config: ToolkitConfig | None = None, seed: int = 0) -> dict:
    """For each owner, how often each other org is kept out of the attribution."""
    config = config or ToolkitConfig()
    messages = _messages(config)
    pairs: dict[str, dict[str, list[bool]]] = {}
    exact: dict[str, list[bool]] = {}
    for o, owner in enumerate(registry):
        pairs[owner.org_id] = {other: [] for other in registry.ids() if other != owner.org_id}
        exact[owner.org_id] = []
        for i, item in enumerate(items):
            program = parse(item.text, item.name)
            marked, embed = insert(program, messages[i % len(messages)], owner, config,
                                   _rng(seed, i, 100 + o))
            if not embed.combined:
                continue
            found = extract(marked, registry, config)
            votes = found.diagnostics["votes"]
            exact[owner.org_id].append(found.attribution == owner.org_id)
            for other in pairs[owner.org_id]:
                pairs[owner.org_id][other].append(votes[owner.org_id] > votes[other])
    return {
        "pairwise": {o: {p: metrics.rate(v) for p, v in d.items()} for o, d in pairs.items()},
        "exact": {o: metrics.rate(v) for o, v in exact.items()},
    }


def indistinguishability(template: str, messages: Sequence[str], repetitions: int,
                         org: OrganizationProfile, config: ToolkitConfig | None = None,
                         seed: int = 0, anchors: int = 12) -> dict:
    """Statistics of the first ``anchors`` formal states over repeated embeddings."""
    config = config or ToolkitConfig()
    program = parse(template)
    have = identify_anchors(program).count(FORMAL)
    if have < anchors:
        raise InsufficientAnchors(FORMAL, have, anchors)
    by_message: dict[str, np.ndarray] = {}
    for j, message in enumerate(messages):
        runs = []
        for rep in range(repetitions):
            marked, _ = insert(program, message, org, config, _rng(seed, j, rep))
            runs.append(identify_anchors(marked).states(FORMAL)[:anchors])
        by_message[message] = np.array(runs, dtype=np.uint8)
    freqs = {m: metrics.activation_frequency(s) for m, s in by_message.items()}
    keys, jsd = metrics.jsd_matrix(freqs)
    pair_values = jsd[np.triu_indices(len(keys), 1)]
    stacked = np.vstack([by_message[m] for m in keys])
    labels = np.repeat(keys, repetitions)
    mi = metrics.mutual_information(stacked, labels)
    # per message pair, as in two-sample comparisons; averaged over the pairs
    pairwise = np.mean([metrics.mutual_information(np.vstack([by_message[a], by_message[b]]),
                                                   np.repeat([a, b], repetitions))
                        for a, b in combinations(keys, 2)], axis=0)
    similarity = {m: metrics.hamming_similarity(s) for m, s in by_message.items()}
    off = np.concatenate([metrics.off_diagonal(s) for s in similarity.values()])
    return {
        "messages": keys,
        "frequencies": {m: freqs[m].tolist() for m in keys},
        "jsd_matrix": jsd.tolist(),
        "jsd_mean": float(pair_values.mean()),
        "jsd_max": float(pair_values.max()),
        "mi_per_anchor": mi.tolist(),
        "mi_total": float(mi.sum()),
        "mi_pairwise_per_anchor": pairwise.tolist(),
        "mi_pairwise_mean": float(pairwise.mean()),
        "mi_pairwise_total": float(pairwise.sum()),
        "similarity_min": float(off.min()),
        "similarity_max": float(off.max()),
        "similarity_range": float(off.max() - off.min()),
        "similarity": {m: s.tolist() for m, s in similarity.items()},
    }
