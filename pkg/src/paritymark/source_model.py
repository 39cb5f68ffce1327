"""Parsing, addressing and canonical rendering of subject programs.

The subject language is Python 3. Programs are parsed with :mod:`ast`;
comments survive as *trivia* attached to the statement that follows them
and are re-emitted on their own line by the renderer. Everything else about
the author's layout is normalised away, so two texts differing only in
whitespace parse to the same tree and render to the same bytes.
"""

from __future__ import annotations

import ast
import bisect
import copy
import io
import tokenize
from dataclasses import dataclass, field
from typing import Any, Iterator

TRIVIA = "trivia"
TAIL_TRIVIA = "tail_trivia"

Step = tuple[str, "int | None"]


class ParseError(Exception):
    """Raised when text is not syntactically valid subject-language source."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


@dataclass(frozen=True)
class NodeAddress:
    """Location of a node: field/index steps from the module root plus its span."""

    path: tuple[Step, ...]
    span: tuple[int, int, int, int] = (0, 0, 0, 0)

    def child(self, field_name: str, index: int | None = None) -> "NodeAddress":
        return NodeAddress(self.path + ((field_name, index),))


@dataclass(frozen=True)
class SubjectProgram:
    text: str
    tree: ast.Module = field(compare=False, repr=False)
    path: str = "<string>"

    def structure(self) -> str:
        """Trivia-free structural dump, used for tree isomorphism checks."""
        return ast.dump(self.tree)

    def copy_tree(self) -> ast.Module:
        return copy.deepcopy(self.tree)


def parse(text: str, path: str = "<string>") -> SubjectProgram:
    try:
        tree = ast.parse(text, filename=path)
    except SyntaxError as exc:
        raise ParseError(exc.lineno or 0, exc.offset or 0, exc.msg) from None
    except ValueError as exc:  # e.g. null bytes
        raise ParseError(0, 0, str(exc)) from None
    _attach_trivia(tree, text)
    return SubjectProgram(text=text, tree=tree, path=path)


def render(program: SubjectProgram | ast.Module) -> str:
    tree = program.tree if isinstance(program, SubjectProgram) else program
    return render_tree(tree)


def render_tree(tree: ast.AST, indent: str = "    ", blank_every: float = 0.0,
                rng: Any = None) -> str:
    """Render a tree; ``indent``/``blank_every`` exist for layout-only perturbation."""
    out = _TriviaUnparser(indent, blank_every, rng).visit(tree)
    return out + "\n" if out else ""


def reparse(program: SubjectProgram) -> SubjectProgram:
    return parse(render(program), program.path)


def resolve(tree: ast.AST, path: tuple[Step, ...]) -> Any:
    node: Any = tree
    for name, index in path:
        node = getattr(node, name)
        if index is not None:
            node = node[index]
    return node


def span_of(node: ast.AST) -> tuple[int, int, int, int]:
    return (
        getattr(node, "lineno", 0),
        getattr(node, "col_offset", 0),
        getattr(node, "end_lineno", 0) or 0,
        getattr(node, "end_col_offset", 0) or 0,
    )


def iter_fields(node: ast.AST) -> Iterator[tuple[str, int | None, ast.AST]]:
    """Yield ``(field, index, child)`` for every AST child, in field order."""
    for name, value in ast.iter_fields(node):
        if isinstance(value, ast.AST):
            yield name, None, value
        elif isinstance(value, list):
            for i, item in enumerate(value):
                if isinstance(item, ast.AST):
                    yield name, i, item


def carry_trivia(dst: ast.AST, *srcs: ast.AST) -> ast.AST:
    comments: list[str] = []
    for src in srcs:
        comments.extend(getattr(src, TRIVIA, ()))
    if comments:
        setattr(dst, TRIVIA, comments)
    return dst


def _comments(text: str) -> list[tuple[int, str]]:
    found = []
    try:
        for tok in tokenize.generate_tokens(io.StringIO(text).readline):
            if tok.type == tokenize.COMMENT:
                found.append((tok.start[0], tok.string.rstrip()))
    except (tokenize.TokenError, IndentationError):
        pass
    return found


def _attach_trivia(tree: ast.Module, text: str) -> None:
    comments = _comments(text)
    if not comments:
        return
    stmts = sorted(
        (n for n in ast.walk(tree) if isinstance(n, ast.stmt)),
        key=lambda n: (n.lineno, n.col_offset),
    )
    keys = [n.lineno for n in stmts]
    tail: list[str] = []
    for line, comment in comments:
        pos = bisect.bisect_left(keys, line)
        if pos == len(stmts):
            tail.append(comment)
        else:
            node = stmts[pos]
            if not hasattr(node, TRIVIA):
                setattr(node, TRIVIA, [])
            getattr(node, TRIVIA).append(comment)
    if tail:
        setattr(tree, TAIL_TRIVIA, tail)


class _TriviaUnparser(ast._Unparser):  # type: ignore[name-defined]
    def __init__(self, indent: str, blank_every: float, rng: Any):
        super().__init__()
        self._unit = indent
        self._blank_every = blank_every
        self._rng = rng
        self._skip_newline = False

    def maybe_newline(self):
        if self._skip_newline:
            self._skip_newline = False
            return
        super().maybe_newline()

    def fill(self, text=""):
        self.maybe_newline()
        self.write(self._unit * self._indent + text)

    def _emit_trivia(self, node):
        if self._blank_every and self._source and self._rng.random() < self._blank_every:
            self.write("\n")
        comments = getattr(node, TRIVIA, ())
        if not comments:
            return
        spaced = isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef))
        if spaced:
            # keep the blank line a definition gets, but above its comments
            self.maybe_newline()
        for comment in comments:
            self.fill(comment)
        self._skip_newline = spaced

    def traverse(self, node):
        if isinstance(node, ast.stmt):
            self._emit_trivia(node)
        super().traverse(node)

    def _write_docstring_and_traverse_body(self, node):
        if self.get_raw_docstring(node):
            self._emit_trivia(node.body[0])
        super()._write_docstring_and_traverse_body(node)

    def visit_Module(self, node):
        super().visit_Module(node)
        for comment in getattr(node, TAIL_TRIVIA, ()):
            self.fill(comment)
