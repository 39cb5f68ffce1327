import ast

import pytest
from hypothesis import given, settings, strategies as st

from paritymark import rules as R
from paritymark.anchors import apply_states, identify_anchors
from paritymark.harness.corpus import load_entry
from paritymark.source_model import parse, render


def toggle_all(text):
    p = parse(text)
    idx = identify_anchors(p)
    return render(apply_states(p, idx, {i: 1 - a.state for i, a in enumerate(idx.formal)}))


@pytest.mark.parametrize("before,after", [
    ("x = x + 1\n", "x += 1\n"),
    ("x = x - y\n", "x -= y\n"),
    ("x = x * 2\n", "x *= 2\n"),
    ("def f(d):\n    L = []\n    for i in d:\n        L.append(i)\n    return L\n",
     "def f(d):\n    L = [i for i in d]\n    return L\n"),
    ("if not (a == b):\n    pass\n", "if a != b:\n    pass\n"),
    ("y = not (a == b)\n", "y = a != b\n"),
    ("def f(c):\n    if c:\n        return True\n    else:\n        return False\n",
     "def f(c):\n    return bool(c)\n"),
    ("y = a < 3\n", "y = 3 > a\n"),
    ("y = a >= -1.5\n", "y = -1.5 <= a\n"),
    ("for i in range(0, n):\n    pass\n", "for i in range(n):\n    pass\n"),
])
def test_rule_pairs(before, after):
    # compare canonical renderings: "not (a == b)" renders as "not a == b"
    before, after = render(parse(before)), render(parse(after))
    assert toggle_all(before) == after
    assert toggle_all(after) == before


@pytest.mark.parametrize("text", [
    "x = x / 2\n",             # operator outside the rule
    "x = y + x\n",             # target not on the left
    "x = x + [1]\n",           # list operand would change aliasing semantics
    "y = a < b\n",             # no literal
    "y = a < True\n",          # bool literal
    "y = 1 < a < 3\n",         # chained
    "for i in range(1, n):\n    pass\n",
    "class C:\n    L = []\n    for i in d:\n        L.append(i)\n",
    "def bool(x):\n    return x\n\ndef f(c):\n    if c:\n        return True\n    else:\n        return False\n",
    "def f(d):\n    L = []\n    for i in d:\n        L.append(i)\n    return (L, i)\n",  # loop var used later
])
def test_non_sites(text):
    assert identify_anchors(parse(text)).count("formal") == 0


def test_states_detected():
    assert [a.state for a in identify_anchors(parse("x += 1\n")).formal] == [1]
    assert [a.state for a in identify_anchors(parse("x = x + 1\n")).formal] == [0]
    comp = "def f(d):\n    L = [i for i in d]\n    return L\n"
    assert [(a.rule, a.state) for a in identify_anchors(parse(comp)).formal] == [(2, 1)]


def test_rule_set_order():
    assert [r.rule_id for r in R.formal_rule_set()] == [1, 2, 3, 4, 5, 6]
    assert [r.rule_id for r in R.formal_rule_set(0b000101)] == [1, 3]


def test_rules_preserve_corpus_behaviour(corpus):
    for item in corpus:
        fn_a = load_entry(item.text)
        fn_b = load_entry(toggle_all(item.text))
        for case in item.cases:
            data, k = case["args"]
            assert fn_a(list(data), k) == fn_b(list(data), k)


def test_round_trip_on_corpus(corpus):
    for item in corpus:
        base = render(parse(item.text))
        assert toggle_all(toggle_all(base)) == base


# ----------------------------------------------------------------- variants

SUF = R.DEFAULT_SUFFIXES


def test_variant_examples():
    assert R.apply_variants("count", {R.UNDERLINE}, SUF) == "count_"
    assert R.apply_variants("count", {R.UNDERLINE, R.CAPITAL}, SUF) == "Count_"
    assert R.apply_variants("count", set(), SUF) == "count"
    assert R.strip_variants("Count_", SUF) == ("count", frozenset({R.UNDERLINE, R.CAPITAL}))
    assert R.strip_variants("total_val", SUF) == ("total", frozenset({R.SUFFIX}))
    assert R.strip_variants("flag", SUF) == ("flag", frozenset())


def test_suffix_is_deterministic():
    assert R.choose_suffix("total", SUF) == R.choose_suffix("total", SUF)
    assert R.choose_suffix("total", SUF) in SUF


canon = st.from_regex(r"[a-z][a-z0-9]{0,6}(_[a-z][a-z0-9]{0,3})?", fullmatch=True)


@settings(max_examples=300)
@given(canon, st.sets(st.sampled_from([R.SUFFIX, R.UNDERLINE, R.CAPITAL])))
def test_variants_decompose(name, chosen):
    if not R.is_clean_canonical(name, SUF):
        return
    spelled = R.apply_variants(name, chosen, SUF)
    assert spelled.isidentifier()
    assert R.strip_variants(spelled, SUF) == (name, frozenset(chosen))
