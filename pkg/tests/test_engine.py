import numpy as np
import pytest

from paritymark import ToolkitConfig, extract, insert, parse
from paritymark.anchors import FORMAL, NATURAL, apply_states, identify_anchors
from paritymark.codec import LengthMismatch
from paritymark.config import ConfigError
from paritymark.engine import CASE1, CASE2, CASE3, NONE, estimate_capacity

RICH = (
    "def f(data, k):\n"
    "    total = 0\n"
    "    for x in data:\n"
    "        total = total + x\n"
    "    count = 0\n"
    "    for y in data:\n"
    "        if y > 3:\n"
    "            count = count + 1\n"
    "    for i in range(0, k):\n"
    "        total = total - i\n"
    "    big = []\n"
    "    for u in data:\n"
    "        big.append(u + 1)\n"
    "    if not (total == k):\n"
    "        count -= 1\n"
    "    prod = 1\n"
    "    for z in data[:3]:\n"
    "        prod = prod * z\n"
    "    small = 2 > count\n"
    "    return (total, count, big, prod, small, 5 < k, k >= 1, k <= 9)\n"
)


@pytest.mark.parametrize("n,case", [(12, CASE1), (7, CASE2), (6, CASE2), (2, CASE3), (5, CASE3), (1, NONE)])
def test_capacity_ladder(n, case):
    assert estimate_capacity(n, "BCH421", 3, 2, 2).case == case


def test_case3_uses_single_anchor_groups():
    cap = estimate_capacity(3, "BCH421", 3, 2, 2)
    assert (cap.l, cap.alpha, cap.tau, cap.q) == (2, 1, 1, 2)


@pytest.mark.parametrize("message", ["00", "01", "10", "11"])
def test_round_trip(message, registry):
    program = parse(RICH)
    assert identify_anchors(program).count(FORMAL) >= 12
    for seed in range(5):
        marked, report = insert(program, message, registry.get("O2"), rng=np.random.default_rng(seed))
        assert report.formal.case == report.natural.case == CASE1
        found = extract(marked, registry)
        assert found.formal.m == found.natural.m == message
        assert found.attribution == "O2" and found.strict


def test_zero_anchor_program_is_untouched(registry):
    text = "def f(a):\n    return a\n"
    marked, report = insert(text, "01", registry.get("O1"))
    assert marked.text == text
    assert not report.combined
    assert report.formal.skipped and report.natural.skipped


def test_empty_program(registry):
    report = extract("", registry)
    assert not report.combined and report.attribution is None


def test_clean_program_not_detected_strictly(registry):
    assert not extract(RICH, registry).strict


def test_bad_message(registry):
    with pytest.raises(LengthMismatch):
        insert(RICH, "011", registry.get("O1"))


def test_config_validation():
    with pytest.raises(ConfigError):
        ToolkitConfig(tau=4)
    with pytest.raises(ConfigError):
        ToolkitConfig(code_id="BCH99")
    cfg = ToolkitConfig().override(seed=3, tau=None)
    assert cfg.seed == 3 and cfg.tau == 2


def test_config_json(tmp_path):
    path = tmp_path / "c.json"
    path.write_text('{"alpha": 3, "tau": 1, "code_id": "HAM74"}')
    cfg = ToolkitConfig.load(path)
    assert (cfg.tau, cfg.code_id) == (1, "HAM74")
    assert ToolkitConfig.from_dict(cfg.to_dict()) == cfg


def test_case2_and_case3_embeddings(registry):
    org = registry.get("O3")
    case2 = "def f(a, b):\n    a = a + 1\n    b = b - 1\n    c = a < 3\n    d = 4 > b\n    e = not (a == b)\n    g = a != 2\n    return c, d, e, g\n"
    for message in ("00", "01", "10", "11"):
        marked, report = insert(case2, message, org, rng=np.random.default_rng(1))
        assert report.formal.case == CASE2
        assert extract(marked, registry, org_id="O3").formal.m == message
    case3 = "def f(a, b):\n    a = a + 1\n    b = b - 1\n    return a, b\n"
    marked, report = insert(case3, "01", org)
    assert report.formal.case == CASE3
    found = extract(marked, registry)
    assert found.formal.detected and found.formal.w == org.fixed_code
    assert not extract(marked, registry, org_id="O1").formal.detected


def test_channels_are_independent(registry):
    marked, _ = insert(RICH, "10", registry.get("O1"), rng=np.random.default_rng(9))
    idx = identify_anchors(marked)
    wrecked_natural = apply_states(marked, idx, natural_states={i: 0 for i in range(idx.count(NATURAL))})
    assert extract(wrecked_natural, registry, org_id="O1").formal.m == "10"
    wrecked_formal = apply_states(marked, idx, formal_states={i: 1 - a.state for i, a in enumerate(idx.formal)})
    assert extract(wrecked_formal, registry, org_id="O1").natural.m == "10"


def test_hamming_round_trip(corpus, registry):
    cfg = ToolkitConfig(code_id="HAM74")
    item = next(i for i in corpus if identify_anchors(parse(i.text)).count(FORMAL) >= 21)
    for m in ("0000", "1011", "1111"):
        marked, report = insert(item.text, m, registry.get("O1"), cfg, np.random.default_rng(2))
        assert report.formal.case == CASE1
        assert extract(marked, registry, cfg, org_id="O1").formal.m == m


def test_report_schema(registry):
    marked, _ = insert(RICH, "01", registry.get("O1"))
    d = extract(marked, registry).to_dict()
    assert d["schema"] == 1
    assert set(d) >= {"formal", "natural", "combined", "strict", "attribution"}
    assert set(d["formal"]) >= {"detected", "w", "m", "case"}


def test_insert_is_deterministic(registry):
    a, _ = insert(RICH, "01", registry.get("O1"), rng=np.random.default_rng(4))
    b, _ = insert(RICH, "01", registry.get("O1"), rng=np.random.default_rng(4))
    assert a.text == b.text
