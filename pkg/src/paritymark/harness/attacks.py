"""Semantics-preserving attacks used to probe robustness."""

from __future__ import annotations

import shlex
import subprocess
from dataclasses import dataclass

import numpy as np

from ..anchors import FORMAL, apply_states, identify_anchors
from ..anchors import all_identifiers, renameable_names, rename_identifiers
from ..source_model import SubjectProgram, parse, render_tree

RENAME, REFACTOR, REFORMAT, LLM = "VariableRename", "Refactor", "Reformat", "LLMRewrite"
ALIASES = {"rename": RENAME, "va": RENAME, "refactor": REFACTOR, "ra": REFACTOR,
           "reformat": REFORMAT, "fa": REFORMAT, "llm": LLM, "la": LLM}
INDENTS = ("  ", "   ", "\t", "        ")


@dataclass(frozen=True)
class AttackSpec:
    kind: str
    intensity: float = 1.0
    seed: int = 0
    command: str | None = None  # external rewriter for LLMRewrite

    def __post_init__(self):
        kind = ALIASES.get(self.kind.lower(), self.kind)
        if kind not in (RENAME, REFACTOR, REFORMAT, LLM):
            raise ValueError(f"unknown attack {self.kind!r}")
        if not 0.0 <= self.intensity <= 1.0:
            raise ValueError("intensity must lie in [0, 1]")
        object.__setattr__(self, "kind", kind)

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "AttackSpec":
        """``kind[:intensity]``, e.g. ``rename:1.0``."""
        kind, _, level = text.partition(":")
        return cls(kind, float(level) if level else 1.0, seed)

    def label(self) -> str:
        return f"{self.kind}:{self.intensity:g}"


def variable_rename(program: SubjectProgram, intensity: float,
                    rng: np.random.Generator) -> SubjectProgram:
    taken = all_identifiers(program.tree)
    mapping = {}
    for name in sorted(renameable_names(program)):
        if rng.random() < intensity:
            while True:
                fresh = "v" + format(int(rng.integers(16**6)), "06x")
                if fresh not in taken:
                    break
            taken.add(fresh)
            mapping[name] = fresh
    return rename_identifiers(program, mapping) if mapping else program


def refactor(program: SubjectProgram, intensity: float,
             rng: np.random.Generator) -> SubjectProgram:
    """Flip each formal anchor with probability ``intensity``, using the rules themselves."""
    index = identify_anchors(program)
    flips = {i: 1 - a.state for i, a in enumerate(index.formal) if rng.random() < intensity}
    return apply_states(program, index, formal_states=flips) if flips else program


def reformat(program: SubjectProgram, intensity: float,
             rng: np.random.Generator) -> SubjectProgram:
    if intensity == 0:
        return program
    indent = INDENTS[int(rng.integers(len(INDENTS)))]
    text = render_tree(program.tree, indent=indent, blank_every=intensity, rng=rng)
    return parse(text, program.path)


def llm_rewrite(program: SubjectProgram, command: str | None) -> SubjectProgram:
    """Pipe the source through an external rewriter; none is bundled."""
    if not command:
        raise NotImplementedError("LLMRewrite needs an external command (AttackSpec.command)")
    done = subprocess.run(shlex.split(command), input=program.text, capture_output=True,
                          text=True, check=True)
    return parse(done.stdout, program.path)


def attack(program: SubjectProgram, spec: AttackSpec,
           rng: np.random.Generator | None = None) -> SubjectProgram:
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    if spec.kind == RENAME:
        return variable_rename(program, spec.intensity, rng)
    if spec.kind == REFACTOR:
        return refactor(program, spec.intensity, rng)
    if spec.kind == REFORMAT:
        return reformat(program, spec.intensity, rng)
    return llm_rewrite(program, spec.command)
