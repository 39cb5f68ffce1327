import ast

import pytest
from hypothesis import given, settings, strategies as st

from paritymark.source_model import ParseError, parse, render, render_tree, resolve


def test_minimal_program():
    p = parse("x = 1\n")
    assert len(p.tree.body) == 1 and isinstance(p.tree.body[0], ast.Assign)


def test_malformed_header_reports_line():
    with pytest.raises(ParseError) as err:
        parse("def f(:\n")
    assert err.value.line == 1


def test_loop_snippet_parses_to_for():
    p = parse("for i in range(N): L[i] = i\n")
    assert isinstance(p.tree.body[0], ast.For)


def test_canonical_spacing():
    assert render(parse("x=1")) == "x = 1\n"


def test_empty_module():
    assert render(parse("")) == ""


def test_comments_survive_as_trivia():
    text = "# head\ndef f():\n    # inside\n    return 1\n# tail\n"
    out = render(parse(text))
    assert out == text
    assert render(parse(out)) == out


def test_resolve_follows_paths():
    p = parse("def f():\n    return 1\n")
    node = resolve(p.tree, (("body", 0), ("body", 0), ("value", None)))
    assert isinstance(node, ast.Constant) and node.value == 1


def test_whitespace_edits_do_not_change_tree():
    a = parse("def f(a):\n    if a:\n        return  a+1\n")
    b = parse("def f( a ):\n\n  if a :\n      return a + 1\n")
    assert a.structure() == b.structure()


def test_reformat_rendering_keeps_tree(corpus, rng):
    for item in corpus[:20]:
        p = parse(item.text)
        for indent in ("  ", "\t", "        "):
            q = parse(render_tree(p.tree, indent=indent, blank_every=0.5, rng=rng))
            assert q.structure() == p.structure()


def test_corpus_round_trip(corpus):
    for item in corpus:
        p = parse(item.text)
        once = render(p)
        assert parse(once).structure() == p.structure()
        assert render(parse(once)) == once


ids = st.from_regex(r"[a-z][a-z0-9]{0,5}", fullmatch=True).filter(
    lambda s: s not in {"if", "in", "is", "or", "as", "def", "for", "not", "and", "del", "try"})


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(ids, st.integers(-50, 50)), min_size=1, max_size=6))
def test_render_is_idempotent(assigns):
    text = "\n".join(f"{n}={v}" for n, v in assigns)
    once = render(parse(text))
    assert render(parse(once)) == once
