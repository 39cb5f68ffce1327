"""Acceptance gate: one verdict line per criterion, at the stated tolerance."""

import time

import numpy as np
import pytest

from paritymark import ToolkitConfig, extract, insert, parse
from paritymark import codec, parity
from paritymark.anchors import FORMAL, identify_anchors
from paritymark.harness.attacks import AttackSpec
from paritymark.harness.evaluate import cross_org, evaluate, indistinguishability, message_accuracy

SEED = 2024
OWNER = "O1"
REFORMATS = [AttackSpec("reformat", x) for x in (0.0, 0.25, 0.5, 1.0)]
ROBUSTNESS = [AttackSpec("rename", 1.0), AttackSpec("refactor", 0.3), *REFORMATS]


@pytest.fixture(scope="module")
def corpus_eval(corpus, registry):
    start = time.perf_counter()
    result = evaluate(corpus, registry, OWNER, ROBUSTNESS, seed=SEED)
    return result.summary, time.perf_counter() - start


def test_c1_codec_exactness(acceptance):
    start = time.perf_counter()
    table = {"00": ("0000", {"0001", "0010", "0100", "1000"}),
             "01": ("0101", {"0101", "0111", "1101"}),
             "10": ("1010", {"1010", "1011", "1110"}),
             "11": ("1111", {"1111"})}
    ok = all(codec.encode(m) == cw and set(codec.valid_set(m)) == valid
             and all(codec.decode(w) == m for w in valid) for m, (cw, valid) in table.items())
    listed = sum(len(v) for _, v in table.values())
    invalid = 0
    for w in ("0000", "0011", "0110", "1001", "1100"):
        try:
            codec.decode(w)
        except codec.InvalidWord:
            invalid += 1
    words = codec.all_words(7)
    ham_total = len({w: codec.decode(w, "HAM74") for w in words}) == 128
    flips = 0
    for m in codec.all_words(4):
        cw = codec.encode(m, "HAM74")
        for i in range(7):
            flipped = cw[:i] + ("1" if cw[i] == "0" else "0") + cw[i + 1:]
            flips += codec.decode(flipped, "HAM74") == m
    elapsed = time.perf_counter() - start
    passed = ok and listed == 11 and invalid == 5 and ham_total and flips == 112 and elapsed < 1
    assert acceptance("C1 codec exactness", passed,
                      f"table ok={ok}, {listed}/11 w, {invalid}/5 invalid, "
                      f"128 words decode={ham_total}, {flips}/112 flips corrected, {elapsed:.3f}s < 1s")


def test_c2_solver_matches_brute_force(acceptance):
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    agree = feasible = 0
    for _ in range(1000):
        l, alpha = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        M = rng.integers(0, 2, (l, l * alpha), dtype=np.uint8)
        c = parity.bits_str(rng.integers(0, 2, l))
        tau = int(rng.integers(1, alpha + 1))
        groups = parity.consecutive_groups(l, alpha)
        truth = parity.enumerate_solutions(M, c, groups, tau)
        try:
            r = parity.solve_constrained(M, c, groups, tau, rng)
            agree += r in truth
            feasible += 1
        except parity.Infeasible:
            agree += not truth
    elapsed = time.perf_counter() - start
    assert acceptance("C2 solver/oracle equivalence", agree == 1000 and elapsed < 30,
                      f"{agree}/1000 agree ({feasible} feasible), {elapsed:.1f}s < 30s")


def test_c3_message_accuracy(acceptance, corpus, registry):
    org = registry.get(OWNER)
    bch = message_accuracy(corpus, org, registry, seed=SEED)
    ham = message_accuracy(corpus, org, registry, ToolkitConfig(code_id="HAM74"), seed=SEED, min_formal=21)
    ok = all(a == t and t > 0 for a, t in list(bch.values()) + list(ham.values()))
    detail = ("BCH421 x4 messages " + ", ".join(f"{ch} {a}/{t}" for ch, (a, t) in bch.items())
              + "; HAM74 x16 messages on >=21-anchor files "
              + ", ".join(f"{ch} {a}/{t}" for ch, (a, t) in ham.items()))
    assert acceptance("C3 MsgAcc = 100%", ok, detail)


def test_c4_discriminability(acceptance, corpus_eval):
    s, elapsed = corpus_eval
    ok = s["tpr"] >= 0.99 and s["fpr_strict"] <= 0.01
    assert acceptance("C4 discriminability", ok,
                      f"TPR {s['tpr']:.4f} >= 0.99 over {s['watermarked']} files, "
                      f"strict FPR {s['fpr_strict']:.4f} <= 0.01 (combined FPR {s['fpr']:.4f}); "
                      f"full corpus run with attacks {elapsed:.0f}s")


def test_c5_fidelity(acceptance, corpus_eval):
    s, _ = corpus_eval
    assert acceptance("C5 fidelity", s["tests_regressed"] == 0,
                      f"{s['tests_regressed']} unit-test regressions after watermarking")


def test_c6_robustness(acceptance, corpus_eval):
    s, elapsed = corpus_eval
    va, ra = s["VariableRename:1"]["tpr"], s["Refactor:0.3"]["tpr"]
    fa = {spec.label(): s[spec.label()]["same_verdict"] for spec in REFORMATS}
    ok = va >= 0.95 and ra >= 0.90 and all(v == 1.0 for v in fa.values()) and elapsed < 300
    assert acceptance("C6 robustness", ok,
                      f"rename@1.0 TPR {va:.4f} >= 0.95, refactor@0.3 TPR {ra:.4f} >= 0.90, "
                      f"reformat identical verdicts {', '.join(f'{k}={v:.2f}' for k, v in fa.items())}")


def test_c7_cross_org(acceptance, corpus, registry):
    res = cross_org(corpus, registry, seed=SEED)
    worst = min(v for d in res["pairwise"].values() for v in d.values())
    detail = "; ".join(f"{o}: " + ", ".join(f"vs {p} {v:.4f}" for p, v in d.items())
                       for o, d in res["pairwise"].items())
    assert acceptance("C7 cross-org exclusivity", worst >= 0.93, f"min {worst:.4f} >= 0.93 ({detail})")


@pytest.fixture(scope="module")
def leakage(corpus, registry):
    template = next(i.text for i in corpus if identify_anchors(parse(i.text)).count(FORMAL) >= 12)
    start = time.perf_counter()
    stats = indistinguishability(template, ["00", "01", "10", "11"], 100, registry.get(OWNER), seed=SEED)
    return stats, time.perf_counter() - start


def test_c8a_jsd(acceptance, leakage):
    stats, elapsed = leakage
    assert acceptance("C8a mean pairwise JSD", stats["jsd_mean"] <= 0.15 and elapsed < 120,
                      f"{stats['jsd_mean']:.4f} nats <= 0.15 (max {stats['jsd_max']:.4f}), {elapsed:.0f}s")


def test_c8b_mutual_information(acceptance, leakage):
    stats, _ = leakage
    assert acceptance("C8b summed anchor-message MI", stats["mi_total"] < 1.0,
                      f"{stats['mi_total']:.4f} bits < 1 (pairwise-message average summed over "
                      f"anchors: {stats['mi_pairwise_total']:.4f} bits)")


def test_c8c_similarity_spread(acceptance, leakage):
    stats, _ = leakage
    assert acceptance("C8c same-message similarity range", stats["similarity_range"] >= 0.3,
                      f"{stats['similarity_min']:.3f}..{stats['similarity_max']:.3f}, "
                      f"range {stats['similarity_range']:.3f} >= 0.3")


def test_c9_overhead(acceptance, corpus, registry):
    item = min(corpus, key=lambda i: abs(len(i.text.splitlines()) - 50))
    lines = len(item.text.splitlines())
    start = time.perf_counter()
    marked, _ = insert(item.text, "01", registry.get(OWNER), rng=np.random.default_rng(SEED))
    found = extract(marked, registry)
    elapsed = time.perf_counter() - start
    assert acceptance("C9 overhead", elapsed < 1.0 and found.combined,
                      f"{lines}-line file embed+detect {elapsed:.3f}s < 1s")
