import numpy as np
import pytest

from paritymark import parse, render
from paritymark.harness import metrics
from paritymark.harness.attacks import AttackSpec, attack
from paritymark.harness.corpus import generate, load_corpus, run_tests
from paritymark.harness.evaluate import EmptyCorpus, evaluate, indistinguishability
from paritymark.anchors import FORMAL, identify_anchors


def test_bundled_corpus_shape(corpus):
    assert len(corpus) >= 100
    counts = [identify_anchors(parse(i.text)).count(FORMAL) for i in corpus]
    assert any(c >= 21 for c in counts)
    assert any(6 <= c < 12 for c in counts) and any(2 <= c < 6 for c in counts)
    for item in corpus:
        assert item.cases and all(run_tests(item.text, item.tests))


def test_generator_is_deterministic(tmp_path):
    a = generate(tmp_path / "a", size=8, seed=5)
    b = generate(tmp_path / "b", size=8, seed=5)
    assert [p.read_text() for p in a] == [p.read_text() for p in b]


@pytest.mark.parametrize("kind", ["rename", "refactor", "reformat"])
def test_zero_intensity_is_identity(kind, corpus):
    p = parse(corpus[40].text)
    assert attack(p, AttackSpec(kind, 0.0)).text == p.text


def test_attacks_preserve_behaviour(corpus, rng):
    for item in corpus[::4]:
        p = parse(item.text)
        for spec in (AttackSpec("rename", 1.0), AttackSpec("refactor", 0.5), AttackSpec("reformat", 1.0)):
            assert all(run_tests(attack(p, spec, rng).text, item.tests))


def test_reformat_keeps_tree(corpus, rng):
    p = parse(corpus[60].text)
    q = attack(p, AttackSpec("reformat", 1.0), rng)
    assert q.structure() == p.structure() and q.text != render(p)


def test_rename_changes_every_local(corpus, rng):
    p = parse(corpus[60].text)
    q = attack(p, AttackSpec("rename", 1.0), rng)
    assert not {c for c, _ in identify_anchors(p).variables} & {c for c, _ in identify_anchors(q).variables}


def test_llm_hook_requires_command():
    with pytest.raises(NotImplementedError):
        attack(parse("x = 1\n"), AttackSpec("llm"))


def test_attack_spec_parsing():
    spec = AttackSpec.parse("rename:0.5")
    assert (spec.kind, spec.intensity) == ("VariableRename", 0.5)
    with pytest.raises(ValueError):
        AttackSpec("shuffle")


def test_jsd_properties():
    p = np.array([0.2, 0.5, 0.9])
    assert np.allclose(metrics.bernoulli_jsd(p, p), 0)
    assert np.isclose(metrics.bernoulli_jsd(np.array([0.0]), np.array([1.0]))[0], np.log(2))


def test_mutual_information_bounds():
    states = np.array([[0], [0], [1], [1]])
    assert np.isclose(metrics.mutual_information(states, ["a", "a", "b", "b"])[0], 1.0)
    assert np.isclose(metrics.mutual_information(states, ["a", "b", "a", "b"])[0], 0.0)


def test_similarity_matrix():
    s = metrics.hamming_similarity(np.array([[0, 1, 1], [0, 0, 1], [1, 0, 0]]))
    assert np.allclose(s, s.T) and np.allclose(np.diag(s), 1)
    assert np.isclose(s[0, 1], 2 / 3)


def test_identity_matrix_gives_degenerate_frequencies(registry):
    # three anchors only: Case 3 with the unit matrix, so states are fixed
    text = "def f(a, b):\n    a = a + 1\n    b = b - 1\n    a = a * 2\n    return a, b\n"
    from paritymark import insert
    runs = [identify_anchors(insert(text, "01", registry.get("O1"), rng=np.random.default_rng(s))[0]).states(FORMAL)
            for s in range(20)]
    freq = metrics.activation_frequency(np.array(runs))
    assert set(freq[:2]) <= {0.0, 1.0}


def test_evaluate_small(corpus, registry):
    res = evaluate(corpus[:10], registry, "O1", [AttackSpec("reformat", 1.0)], seed=1)
    assert len(res.rows) == 10 and res.summary["tpr"] == 1.0
    with pytest.raises(EmptyCorpus):
        evaluate([], registry, "O1")


def test_indistinguishability_needs_anchors(registry):
    from paritymark.anchors import InsufficientAnchors
    with pytest.raises(InsufficientAnchors):
        indistinguishability("x = x + 1\n", ["00"], 2, registry.get("O1"))
