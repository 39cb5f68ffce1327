"""Synthetic subject corpus: generator, loader and unit-test runner.

Each corpus entry is a small module whose entry point ``f(data, k)`` is
assembled from idiomatic blocks (running sums, list building, counting,
range loops, boolean helpers ...). Every block is written in one of its two
equivalent spellings at random, the way a real code base mixes styles.
Expected outputs are snapshotted from the generated code itself, so the
tests pin current behaviour and catch any change a transformation makes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Callable

import numpy as np

from ..anchors import FORMAL, NATURAL, identify_anchors
from ..source_model import parse

ENTRY = "f"
DEFAULT_SEED = 2024
DEFAULT_SIZE = 120

ACC_NAMES = ["total", "acc", "running", "score", "tally", "gain", "budget", "weight",
             "offset", "level", "sum_sq", "energy", "mass", "drift", "credit", "span"]
LIST_NAMES = ["squares", "doubled", "shifted", "scaled", "picked", "kept", "parts",
              "signs", "halves", "marks", "copies", "bumped"]
COUNT_NAMES = ["count", "hits", "misses", "above", "below", "small", "large", "odd_seen"]
LOOP_NAMES = ["x", "y", "z", "u", "t", "e", "num", "elem", "cur", "part", "step", "idx",
              "j", "i", "p", "q", "h", "g", "item", "val", "piece", "entry", "unit", "cell"]
FLAG_NAMES = ["flag", "ok", "done", "ready", "found", "valid", "empty", "full"]


@dataclass(frozen=True)
class CorpusItem:
    name: str
    text: str
    tests: dict

    @property
    def cases(self) -> list[dict]:
        return self.tests["cases"]


class _Names:
    """Hands out unused names from the pools so blocks never collide."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self.used: set[str] = set()

    def take(self, pool: list[str]) -> str:
        free = [n for n in pool if n not in self.used]
        if not free:
            base = pool[int(self.rng.integers(len(pool)))]
            n = 2
            while f"{base}{n}" in self.used:
                n += 1
            free = [f"{base}{n}"]
        name = free[int(self.rng.integers(len(free)))]
        self.used.add(name)
        return name


def _lit(rng) -> int:
    return int(rng.integers(-2, 8))


def _coin(rng) -> bool:
    return bool(rng.integers(2))


def _aug(rng, var: str, op: str, expr: str) -> str:
    return f"{var} {op}= {expr}" if _coin(rng) else f"{var} = {var} {op} {expr}"


def _cmp(rng, left: str, op: str, lit: int) -> str:
    mirror = {"<": ">", ">": "<", "<=": ">=", ">=": "<="}
    return f"{left} {op} {lit}" if _coin(rng) else f"{lit} {mirror[op]} {left}"


def _range(rng, stop: str) -> str:
    return f"range({stop})" if _coin(rng) else f"range(0, {stop})"


def _ne(rng, a: str, b: str) -> str:
    return f"{a} != {b}" if _coin(rng) else f"not ({a} == {b})"


# Each block returns (lines, result names to return). Anchors noted per block.

def block_accumulate(rng, names: _Names, helpers: list[str]):
    # R1
    acc, it = names.take(ACC_NAMES), names.take(LOOP_NAMES)
    op = ["+", "-"][int(rng.integers(2))]
    return [f"{acc} = {int(rng.integers(0, 5))}", f"for {it} in data:",
            f"    {_aug(rng, acc, op, it)}"], [acc]


def block_build(rng, names: _Names, helpers: list[str]):
    # R2 (the element may hide an R5 or R6 site, suppressed by the outer match)
    lst, it = names.take(LIST_NAMES), names.take(LOOP_NAMES)
    elt = [f"{it} * {int(rng.integers(2, 4))}", f"{it} + k", f"-{it}", f"{it} % 3"][int(rng.integers(4))]
    source = "data" if _coin(rng) else f"{_range(rng, 'len(data)')}"
    if source != "data":
        elt = elt.replace(it, f"data[{it}]")
    if _coin(rng):
        return [f"{lst} = [{elt} for {it} in {source}]"], [lst]
    return [f"{lst} = []", f"for {it} in {source}:", f"    {lst}.append({elt})"], [lst]


def block_count(rng, names: _Names, helpers: list[str]):
    # R5, R1
    cnt, it = names.take(COUNT_NAMES), names.take(LOOP_NAMES)
    op = ["<", ">", "<=", ">="][int(rng.integers(4))]
    return [f"{cnt} = 0", f"for {it} in data:", f"    if {_cmp(rng, it, op, _lit(rng))}:",
            f"        {_aug(rng, cnt, '+', '1')}"], [cnt]


def block_range(rng, names: _Names, helpers: list[str]):
    # R6, R1
    acc, it = names.take(ACC_NAMES), names.take(LOOP_NAMES)
    op = ["+", "*", "-"][int(rng.integers(3))]
    start = 1 if op == "*" else 0
    expr = f"({it} % 3 + 1)" if op == "*" else it
    return [f"{acc} = {start}", f"for {it} in {_range(rng, 'k')}:",
            f"    {_aug(rng, acc, op, expr)}"], [acc]


def block_not_equal(rng, names: _Names, helpers: list[str]):
    # R3, R1
    acc = names.take(ACC_NAMES)
    return [f"{acc} = len(data)", f"if {_ne(rng, acc, 'k')}:",
            f"    {_aug(rng, acc, '-', '1')}"], [acc]


def block_helper(rng, names: _Names, helpers: list[str]):
    # R4 on the helper (its comparison is claimed by R4); the call site adds a flag
    fn = f"check_{len(helpers)}"
    op = ["<", ">", "<=", ">="][int(rng.integers(4))]
    cond = f"v {op} {_lit(rng)}" if _coin(rng) else f"v % 2 == {int(rng.integers(2))}"
    if _coin(rng):
        body = [f"def {fn}(v):", f"    return bool({cond})"]
    else:
        body = [f"def {fn}(v):", f"    if {cond}:", "        return True",
                "    else:", "        return False"]
    helpers.append("\n".join(body))
    flag = names.take(FLAG_NAMES)
    return [f"{flag} = {fn}(len(data) + k)"], [flag]


def block_product(rng, names: _Names, helpers: list[str]):
    # R1
    acc, it = names.take(ACC_NAMES), names.take(LOOP_NAMES)
    return [f"{acc} = 1", f"for {it} in data[:3]:", f"    {_aug(rng, acc, '*', it)}"], [acc]


def block_countdown(rng, names: _Names, helpers: list[str]):
    # R5, R1
    acc = names.take(ACC_NAMES)
    return [f"{acc} = k", f"while {_cmp(rng, acc, '>', 0)}:",
            f"    {_aug(rng, acc, '-', str(int(rng.integers(1, 3))))}"], [acc]


def block_plain(rng, names: _Names, helpers: list[str]):
    # no anchors in the formal channel
    acc = names.take(ACC_NAMES)
    return [f"{acc} = max(data) if data else k"], [acc]


BLOCKS: list[Callable] = [block_accumulate, block_build, block_count, block_range,
                          block_not_equal, block_helper, block_product, block_countdown]

# (formal anchor range, minimum natural variables, share of the corpus)
SIZE_CLASSES = [
    ((0, 0), 0, 2),    # nothing to mark
    ((0, 1), 4, 2),    # natural channel only
    ((2, 5), 2, 10),   # formal Case 3
    ((6, 11), 2, 14),  # formal Case 2
    ((12, 20), 4, 62),
    ((21, 32), 4, 30),
]


def _render(rng, n_blocks: int, *, plain_only: bool = False) -> str:
    names, helpers = _Names(rng), []
    lines, results = [], []
    for _ in range(n_blocks):
        block = block_plain if plain_only else BLOCKS[int(rng.integers(len(BLOCKS)))]
        block_lines, out = block(rng, names, helpers)
        lines += block_lines
        results += out
    if plain_only:
        # keep the entry free of function locals so no variable is renameable either
        lines, results = [], ["k"]
        for _ in range(n_blocks):
            results.append(f"(max(data) if data else k) + {int(rng.integers(5))}")
    head = f"def {ENTRY}(data, k):"
    ret = f"    return ({', '.join(results)},)"
    parts = helpers + [head + "\n" + "\n".join("    " + ln for ln in lines) + ("\n" if lines else "") + ret]
    return "\n\n\n".join(parts) + "\n"


def _counts(text: str) -> tuple[int, int]:
    index = identify_anchors(parse(text))
    return index.count(FORMAL), len(index.variables)


def generate_program(rng: np.random.Generator, size_class: int) -> str:
    (lo, hi), min_vars, _ = SIZE_CLASSES[size_class]
    while True:
        if hi == 0:
            text = _render(rng, int(rng.integers(1, 3)), plain_only=True)
        elif hi <= 1:
            text = _render(rng, 1) if _coin(rng) else None
            if text is None:
                # a lone plain block plus loop variables for the natural channel
                names, its = _Names(rng), []
                body = []
                for _ in range(int(rng.integers(4, 6))):
                    it = names.take(LOOP_NAMES)
                    its.append(it)
                    body.append(f"    {it} = len(data) + {int(rng.integers(5))}")
                text = (f"def {ENTRY}(data, k):\n" + "\n".join(body)
                        + f"\n    return ({', '.join(its)},)\n")
        else:
            text = _render(rng, int(rng.integers(max(1, lo // 2), hi // 2 + 3)))
        formal, variables = _counts(text)
        if lo <= formal <= hi and variables >= min_vars:
            return text


def _snapshot(value: Any) -> Any:
    return json.loads(json.dumps(value))


def make_cases(text: str, rng: np.random.Generator, count: int = 6) -> list[dict]:
    fn = load_entry(text)
    cases = []
    for _ in range(count):
        data = [int(v) for v in rng.integers(-5, 13, size=int(rng.integers(0, 9)))]
        k = int(rng.integers(0, 7))
        cases.append({"args": [data, k], "expected": _snapshot(fn(list(data), k))})
    return cases


def generate(out_dir: str | Path, size: int = DEFAULT_SIZE, seed: int = DEFAULT_SEED) -> list[Path]:
    """Write ``size`` programs and their tests into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    shares = np.array([c[2] for c in SIZE_CLASSES], dtype=float)
    quotas = np.floor(shares / shares.sum() * size).astype(int)
    quotas[-2] += size - quotas.sum()
    classes = [i for i, q in enumerate(quotas) for _ in range(q)]
    written = []
    for number, cls in enumerate(classes):
        text = generate_program(rng, cls)
        path = out / f"{number:03d}.py"
        path.write_text(text)
        tests = {"entry": ENTRY, "size_class": cls, "cases": make_cases(text, rng)}
        (out / f"{number:03d}.tests.json").write_text(json.dumps(tests, indent=1) + "\n")
        written.append(path)
    return written


def bundled_dir() -> Path:
    return Path(str(resources.files("paritymark") / "data" / "corpus"))


def load_corpus(directory: str | Path | None = None) -> list[CorpusItem]:
    directory = Path(directory) if directory is not None else bundled_dir()
    items = []
    for path in sorted(directory.glob("*.py")):
        test_path = path.with_name(path.stem + ".tests.json")
        tests = json.loads(test_path.read_text()) if test_path.exists() else {"entry": ENTRY, "cases": []}
        items.append(CorpusItem(path.stem, path.read_text(), tests))
    return items


def load_entry(text: str, entry: str = ENTRY) -> Callable:
    namespace: dict[str, Any] = {"__name__": "corpus_subject"}
    exec(compile(text, "<corpus>", "exec"), namespace)
    return namespace[entry]


def run_tests(text: str, tests: dict) -> list[bool]:
    """Outcome of each case against ``text``; a crash fails every case."""
    try:
        fn = load_entry(text, tests.get("entry", ENTRY))
    except Exception:
        return [False] * len(tests["cases"])
    outcomes = []
    for case in tests["cases"]:
        data, k = case["args"]
        try:
            outcomes.append(_snapshot(fn(list(data), k)) == case["expected"])
        except Exception:
            outcomes.append(False)
    return outcomes


if __name__ == "__main__":
    for p in generate(bundled_dir()):
        print(p)
