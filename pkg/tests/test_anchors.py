import json
from pathlib import Path

import numpy as np
import pytest

from paritymark.anchors import (FORMAL, NATURAL, InsufficientAnchors, apply_states,
                                group_anchors, identify_anchors)
from paritymark.source_model import parse, render

WORKED = Path(__file__).parent / "fixtures" / "worked"
EXPECTED = json.loads((WORKED / "expected.json").read_text())


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_worked_fixture_counts(name):
    want = EXPECTED[name]
    idx = identify_anchors(parse((WORKED / name).read_text()))
    assert [[a.rule, a.state] for a in idx.formal] == want["formal"]
    assert [c for c, _ in idx.variables] == want["variables"]
    assert idx.count(NATURAL) == 3 * len(want["variables"])
    for pos, (canonical, _) in enumerate(idx.variables):
        if canonical in want.get("states", {}):
            got = [idx.natural[3 * pos + j].state for j in range(3)]
            assert got == want["states"][canonical]


def test_ordering_example():
    text = "def f(d):\n    x = 0\n    x += 1\n    L = []\n    for i in d:\n        L.append(i)\n    return L, x\n"
    idx = identify_anchors(parse(text))
    assert [(a.rule, a.state) for a in idx.formal] == [(1, 1), (2, 0)]


def test_variant_states_example():
    idx = identify_anchors(parse("def f():\n    Count_ = 1\n    flag = 2\n    return Count_, flag\n"))
    assert [c for c, _ in idx.variables] == ["count", "flag"]
    assert idx.states(NATURAL)[:3] == [0, 1, 1]


def _index_with(n):
    body = "".join(f"    x = x + {i}\n" for i in range(n))
    return identify_anchors(parse(f"def f(x):\n{body}    return x\n"))


def test_grouping():
    assert group_anchors(_index_with(12), 3, 4) == [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]]
    assert group_anchors(_index_with(13), 3, 4) == [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]]
    with pytest.raises(InsufficientAnchors) as err:
        group_anchors(_index_with(5), 3, 4)
    assert (err.value.have, err.value.need) == (5, 12)


def test_stability(corpus):
    for item in corpus[:30]:
        assert identify_anchors(parse(item.text)) == identify_anchors(parse(item.text))


def test_embed_detect_symmetry(corpus):
    rng = np.random.default_rng(3)
    for item in corpus:
        p = parse(item.text)
        idx = identify_anchors(p)
        fs = {i: int(rng.integers(2)) for i in range(idx.count(FORMAL))}
        ns = {i: int(rng.integers(2)) for i in range(idx.count(NATURAL))}
        q = apply_states(p, idx, fs, ns)
        again = identify_anchors(parse(render(q)))
        assert [a.rule for a in again.formal] == [a.rule for a in idx.formal]
        assert [c for c, _ in again.variables] == [c for c, _ in idx.variables]
        assert again.states(FORMAL) == [fs[i] for i in range(len(fs))]
        assert again.states(NATURAL) == [ns[i] for i in range(len(ns))]


def test_module_level_loop_does_not_leak_into_natural_channel():
    text = "L = []\nfor v in range(10):\n    L.append(v)\n\ndef f(a):\n    t = [y for y in a]\n    return t\n"
    p = parse(text)
    idx = identify_anchors(p)
    flipped = identify_anchors(apply_states(p, idx, {0: 1 - idx.formal[0].state}))
    assert flipped.variables == idx.variables == (("t", "t"), ("y", "y"))


def test_async_code_has_no_formal_anchors():
    text = "async def f(a):\n    x = 0\n    x = x + a\n    return x\n"
    assert identify_anchors(parse(text)).count(FORMAL) == 0
