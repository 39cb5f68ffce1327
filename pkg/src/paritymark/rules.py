"""Formal-channel rewrite rules and natural-channel renaming variants.

Every formal rule recognises a site in one of two shapes, the *plain* form
(state 0) and the *transformed* form (state 1), and can rewrite a site into
either. Rules never mutate the nodes they are given.

=====  ===========================  ==================================
 id     plain form                    transformed form
=====  ===========================  ==================================
 1      ``x = x + e``                 ``x += e``   (``+ - *``)
 2      ``L = []`` / append loop      ``L = [e for t in it]``
 3      ``not (a == b)``              ``a != b``
 4      ``if c: return True``         ``return bool(c)``
        ``else: return False``
 5      ``a < 5``                     ``5 > a``    (literal side only)
 6      ``range(0, n)``               ``range(n)``
=====  ===========================  ==================================
"""

from __future__ import annotations

import ast
import builtins
import keyword
import zlib
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from paritymark.source_model import NodeAddress, SubjectProgram, carry_trivia, resolve


class NotAnAnchor(Exception):
    pass


class CollisionError(Exception):
    pass


# ---------------------------------------------------------------- context

_UNSAFE = (ast.NamedExpr, ast.Yield, ast.YieldFrom, ast.Await, ast.Lambda)
_DISPLAYS = (ast.List, ast.Tuple, ast.Set, ast.Dict, ast.ListComp, ast.SetComp,
             ast.DictComp, ast.GeneratorExp)
_SCOPES = (ast.Module, ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)


def identifiers(node: ast.AST) -> Counter:
    """Count every identifier occurrence (names, params, defs, imports) under ``node``."""
    seen: Counter = Counter()
    for sub in ast.walk(node):
        if isinstance(sub, ast.Name):
            seen[sub.id] += 1
        elif isinstance(sub, ast.arg):
            seen[sub.arg] += 1
        elif isinstance(sub, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)):
            seen[sub.name] += 1
        elif isinstance(sub, ast.alias):
            seen[(sub.asname or sub.name).split(".")[0]] += 1
        elif isinstance(sub, (ast.Global, ast.Nonlocal)):
            seen.update(sub.names)
        elif isinstance(sub, ast.ExceptHandler) and sub.name:
            seen[sub.name] += 1
    return seen


def bound_names(tree: ast.AST) -> set[str]:
    """Names the module binds anywhere; used to detect shadowed builtins."""
    out: set[str] = set()
    for sub in ast.walk(tree):
        if isinstance(sub, ast.Name) and not isinstance(sub.ctx, ast.Load):
            out.add(sub.id)
        elif isinstance(sub, ast.arg):
            out.add(sub.arg)
        elif isinstance(sub, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)):
            out.add(sub.name)
        elif isinstance(sub, ast.alias):
            out.add((sub.asname or sub.name).split(".")[0])
        elif isinstance(sub, (ast.Global, ast.Nonlocal)):
            out.update(sub.names)
        elif isinstance(sub, ast.ExceptHandler) and sub.name:
            out.add(sub.name)
    return out


@dataclass
class RuleContext:
    """Whole-module facts the applicability predicates depend on."""

    tree: ast.Module
    scope: ast.AST = None  # innermost enclosing Module/FunctionDef/ClassDef
    rebound: set[str] = field(default_factory=set)
    _counts: dict = field(default_factory=dict)

    @classmethod
    def for_tree(cls, tree: ast.Module) -> "RuleContext":
        return cls(tree=tree, scope=tree, rebound=bound_names(tree))

    def within(self, scope: ast.AST) -> "RuleContext":
        return RuleContext(self.tree, scope, self.rebound, self._counts)

    def scope_counts(self) -> Counter:
        key = id(self.scope)
        if key not in self._counts:
            # module-level loop variables leak into the global namespace
            root = self.tree if isinstance(self.scope, ast.Module) else self.scope
            self._counts[key] = identifiers(root)
        return self._counts[key]


def _names_in(node: ast.AST) -> set[str]:
    return {n.id for n in ast.walk(node) if isinstance(n, ast.Name)}


def _has(node: ast.AST, kinds) -> bool:
    return any(isinstance(n, kinds) for n in ast.walk(node))


def _target_names(target: ast.AST) -> list[str] | None:
    if isinstance(target, ast.Name):
        return [target.id]
    if isinstance(target, (ast.Tuple, ast.List)):
        out = []
        for elt in target.elts:
            sub = _target_names(elt)
            if sub is None:
                return None
            out.extend(sub)
        return out
    return None


def _loc(new: ast.AST, old: ast.AST) -> ast.AST:
    ast.copy_location(new, old)
    return ast.fix_missing_locations(new)


# ------------------------------------------------------------------ rules

class FormalRule:
    """Base class. ``level`` is ``"stmt"`` (site = statement run) or ``"expr"``."""

    rule_id: int = 0
    name: str = ""
    level: str = "expr"

    # statement rules: match(body, i, ctx) -> (width, state) | None
    # expression rules: match(node, ctx) -> state | None

    def rewrite(self, nodes: list, state: int) -> list:
        """Return replacement nodes whose state is ``state`` (identity if already there)."""
        if self.state_of(nodes) == state:
            return list(nodes)
        return self._apply(nodes) if state else self._reverse(nodes)

    def apply(self, nodes: list) -> list:
        if self.state_of(nodes) != 0:
            raise NotAnAnchor(f"{self.name}: site is not in its plain form")
        return self._apply(nodes)

    def reverse(self, nodes: list) -> list:
        if self.state_of(nodes) != 1:
            raise NotAnAnchor(f"{self.name}: site is not in its transformed form")
        return self._reverse(nodes)

    def state_of(self, nodes: list) -> int | None:
        raise NotImplementedError

    def _apply(self, nodes):
        raise NotImplementedError

    def _reverse(self, nodes):
        raise NotImplementedError

    def __repr__(self):
        return f"R{self.rule_id}({self.name})"


class AugmentedAssign(FormalRule):
    rule_id, name, level = 1, "augmented-assignment", "stmt"
    OPS = (ast.Add, ast.Sub, ast.Mult)

    @classmethod
    def _operand_ok(cls, target: str, value: ast.AST) -> bool:
        return (not isinstance(value, _DISPLAYS) and target not in _names_in(value)
                and not _has(value, _UNSAFE[:4]))

    def state_of(self, nodes):
        if len(nodes) != 1:
            return None
        s = nodes[0]
        if (isinstance(s, ast.Assign) and len(s.targets) == 1
                and isinstance(s.targets[0], ast.Name) and s.type_comment is None
                and isinstance(s.value, ast.BinOp) and isinstance(s.value.op, self.OPS)
                and isinstance(s.value.left, ast.Name)
                and s.value.left.id == s.targets[0].id
                and self._operand_ok(s.targets[0].id, s.value.right)):
            return 0
        if (isinstance(s, ast.AugAssign) and isinstance(s.target, ast.Name)
                and isinstance(s.op, self.OPS)
                and self._operand_ok(s.target.id, s.value)):
            return 1
        return None

    def match(self, body, i, ctx):
        state = self.state_of(body[i:i + 1])
        return None if state is None else (1, state)

    def _apply(self, nodes):
        s = nodes[0]
        name = s.targets[0].id
        new = ast.AugAssign(target=ast.Name(name, ast.Store()), op=s.value.op,
                            value=s.value.right)
        return [carry_trivia(_loc(new, s), s)]

    def _reverse(self, nodes):
        s = nodes[0]
        name = s.target.id
        new = ast.Assign(targets=[ast.Name(name, ast.Store())],
                         value=ast.BinOp(ast.Name(name, ast.Load()), s.op, s.value),
                         type_comment=None)
        return [carry_trivia(_loc(new, s), s)]


class LoopToComprehension(FormalRule):
    rule_id, name, level = 2, "loop-to-comprehension", "stmt"

    @staticmethod
    def _parts(nodes):
        """Return (list name, target, iter, element, state) or None."""
        if len(nodes) == 1:
            s = nodes[0]
            if (isinstance(s, ast.Assign) and len(s.targets) == 1
                    and isinstance(s.targets[0], ast.Name) and s.type_comment is None
                    and isinstance(s.value, ast.ListComp)
                    and len(s.value.generators) == 1):
                gen = s.value.generators[0]
                if not gen.ifs and not gen.is_async:
                    return s.targets[0].id, gen.target, gen.iter, s.value.elt, 1
            return None
        if len(nodes) == 2:
            init, loop = nodes
            if not (isinstance(init, ast.Assign) and len(init.targets) == 1
                    and isinstance(init.targets[0], ast.Name)
                    and init.type_comment is None
                    and isinstance(init.value, ast.List) and not init.value.elts):
                return None
            name = init.targets[0].id
            if not (isinstance(loop, ast.For) and not loop.orelse
                    and loop.type_comment is None and len(loop.body) == 1):
                return None
            stmt = loop.body[0]
            if not (isinstance(stmt, ast.Expr) and isinstance(stmt.value, ast.Call)):
                return None
            call = stmt.value
            if not (isinstance(call.func, ast.Attribute) and call.func.attr == "append"
                    and isinstance(call.func.value, ast.Name)
                    and call.func.value.id == name
                    and len(call.args) == 1 and not call.keywords
                    and not isinstance(call.args[0], ast.Starred)):
                return None
            return name, loop.target, loop.iter, call.args[0], 0
        return None

    def _valid(self, nodes, ctx) -> int | None:
        parts = self._parts(nodes)
        if parts is None or isinstance(ctx.scope, ast.ClassDef):
            return None
        name, target, it, elt, state = parts
        targets = _target_names(target)
        if not targets or name in targets:
            return None
        if name in _names_in(elt) | _names_in(it) or set(targets) & _names_in(it):
            return None
        if _has(elt, _UNSAFE) or _has(it, _UNSAFE):
            return None
        inside = Counter()
        for node in nodes:
            inside.update(identifiers(node))
        counts = ctx.scope_counts()
        if any(counts[t] != inside[t] for t in targets):
            return None
        return state

    def state_of(self, nodes):
        parts = self._parts(nodes)
        return None if parts is None else parts[-1]

    def match(self, body, i, ctx):
        for width in (1, 2):
            if i + width <= len(body):
                state = self._valid(body[i:i + width], ctx)
                if state is not None:
                    return width, state
        return None

    def _apply(self, nodes):
        name, target, it, elt, _ = self._parts(nodes)
        comp = ast.ListComp(elt=elt, generators=[
            ast.comprehension(target=target, iter=it, ifs=[], is_async=0)])
        new = ast.Assign(targets=[ast.Name(name, ast.Store())], value=comp,
                         type_comment=None)
        return [carry_trivia(_loc(new, nodes[0]), *nodes)]

    def _reverse(self, nodes):
        name, target, it, elt, _ = self._parts(nodes)
        init = ast.Assign(targets=[ast.Name(name, ast.Store())],
                          value=ast.List(elts=[], ctx=ast.Load()), type_comment=None)
        append = ast.Expr(ast.Call(
            func=ast.Attribute(ast.Name(name, ast.Load()), "append", ast.Load()),
            args=[elt], keywords=[]))
        loop = ast.For(target=target, iter=it, body=[_loc(append, nodes[0])],
                       orelse=[], type_comment=None)
        return [carry_trivia(_loc(init, nodes[0]), nodes[0]), _loc(loop, nodes[0])]


class NegatedEquality(FormalRule):
    rule_id, name, level = 3, "negated-equality", "expr"

    def state_of(self, nodes):
        e = nodes[0]
        if (isinstance(e, ast.Compare) and len(e.ops) == 1
                and isinstance(e.ops[0], ast.NotEq)):
            return 1
        if (isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.Not)
                and isinstance(e.operand, ast.Compare) and len(e.operand.ops) == 1
                and isinstance(e.operand.ops[0], ast.Eq)):
            return 0
        return None

    def match(self, node, ctx):
        return self.state_of([node])

    def _apply(self, nodes):
        cmp_ = nodes[0].operand
        return [_loc(ast.Compare(cmp_.left, [ast.NotEq()], cmp_.comparators), nodes[0])]

    def _reverse(self, nodes):
        e = nodes[0]
        inner = ast.Compare(e.left, [ast.Eq()], e.comparators)
        return [_loc(ast.UnaryOp(ast.Not(), _loc(inner, e)), e)]


class BoolReturn(FormalRule):
    rule_id, name, level = 4, "boolean-return", "stmt"

    @staticmethod
    def _is_const_return(stmt, value) -> bool:
        return (isinstance(stmt, ast.Return) and isinstance(stmt.value, ast.Constant)
                and stmt.value.value is value)

    def state_of(self, nodes):
        if len(nodes) != 1:
            return None
        s = nodes[0]
        if (isinstance(s, ast.If) and len(s.body) == 1 and len(s.orelse) == 1
                and self._is_const_return(s.body[0], True)
                and self._is_const_return(s.orelse[0], False)):
            return 0
        if (isinstance(s, ast.Return) and isinstance(s.value, ast.Call)
                and isinstance(s.value.func, ast.Name) and s.value.func.id == "bool"
                and len(s.value.args) == 1 and not s.value.keywords
                and not isinstance(s.value.args[0], ast.Starred)):
            return 1
        return None

    def match(self, body, i, ctx):
        if "bool" in ctx.rebound:
            return None
        state = self.state_of(body[i:i + 1])
        return None if state is None else (1, state)

    def _apply(self, nodes):
        s = nodes[0]
        call = ast.Call(ast.Name("bool", ast.Load()), [s.test], [])
        return [carry_trivia(_loc(ast.Return(call), s), s, s.body[0], s.orelse[0])]

    def _reverse(self, nodes):
        s = nodes[0]
        new = ast.If(test=s.value.args[0],
                     body=[_loc(ast.Return(ast.Constant(True)), s)],
                     orelse=[_loc(ast.Return(ast.Constant(False)), s)])
        return [carry_trivia(_loc(new, s), s)]


def _is_literal(node: ast.AST) -> bool:
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        node = node.operand
    return (isinstance(node, ast.Constant) and type(node.value) in (int, float))


class ComparisonMirror(FormalRule):
    rule_id, name, level = 5, "comparison-mirror", "expr"
    MIRROR = {ast.Lt: ast.Gt, ast.Gt: ast.Lt, ast.LtE: ast.GtE, ast.GtE: ast.LtE}

    def state_of(self, nodes):
        e = nodes[0]
        if not (isinstance(e, ast.Compare) and len(e.ops) == 1
                and type(e.ops[0]) in self.MIRROR):
            return None
        left, right = _is_literal(e.left), _is_literal(e.comparators[0])
        if right and not left:
            return 0
        if left and not right:
            return 1
        return None

    def match(self, node, ctx):
        return self.state_of([node])

    def _flip(self, nodes):
        e = nodes[0]
        op = self.MIRROR[type(e.ops[0])]()
        return [_loc(ast.Compare(e.comparators[0], [op], [e.left]), e)]

    _apply = _reverse = _flip


class RangeStart(FormalRule):
    rule_id, name, level = 6, "range-start-elision", "expr"

    def state_of(self, nodes):
        e = nodes[0]
        if not (isinstance(e, ast.Call) and isinstance(e.func, ast.Name)
                and e.func.id == "range" and not e.keywords):
            return None
        if any(isinstance(a, ast.Starred) for a in e.args):
            return None
        if len(e.args) == 1:
            return 1
        if (len(e.args) == 2 and isinstance(e.args[0], ast.Constant)
                and type(e.args[0].value) is int and e.args[0].value == 0):
            return 0
        return None

    def match(self, node, ctx):
        if "range" in ctx.rebound:
            return None
        return self.state_of([node])

    def _apply(self, nodes):
        e = nodes[0]
        return [_loc(ast.Call(e.func, [e.args[1]], []), e)]

    def _reverse(self, nodes):
        e = nodes[0]
        return [_loc(ast.Call(e.func, [_loc(ast.Constant(0), e), e.args[0]], []), e)]


_RULES = (AugmentedAssign(), LoopToComprehension(), NegatedEquality(), BoolReturn(),
          ComparisonMirror(), RangeStart())


def formal_rule_set(mask: int = 0b111111) -> list[FormalRule]:
    """The ordered rule set; bit ``i`` of ``mask`` enables rule ``i + 1``."""
    return [r for r in _RULES if mask >> (r.rule_id - 1) & 1]


def rule_by_id(rule_id: int) -> FormalRule:
    return _RULES[rule_id - 1]


def site_nodes(tree: ast.AST, address: NodeAddress, width: int = 1) -> list:
    *head, (name, index) = address.path
    parent = resolve(tree, tuple(head))
    if index is None:
        return [getattr(parent, name)]
    return getattr(parent, name)[index:index + width]


def detect_state(program: SubjectProgram, address: NodeAddress, rule: FormalRule) -> int:
    """1 if the site at ``address`` is in ``rule``'s transformed form, else 0."""
    nodes = site_nodes(program.tree, address, 2 if rule.level == "stmt" else 1)
    state = rule.state_of(nodes[:1])
    if state is None and len(nodes) == 2:
        state = rule.state_of(nodes)
    if state is None:
        raise NotAnAnchor(f"{rule!r} does not match at {address.path}")
    return state


# --------------------------------------------------------------- variants

SUFFIX, UNDERLINE, CAPITAL = 1, 2, 3
VARIANT_NAMES = {SUFFIX: "Suffix", UNDERLINE: "Underline", CAPITAL: "InitialCapitalization"}
VARIANT_ORDER = (SUFFIX, UNDERLINE, CAPITAL)
DEFAULT_SUFFIXES = ("_val", "_obj", "_item", "_tmp")

_RESERVED_WORDS = frozenset(keyword.kwlist) | frozenset(dir(builtins))


def choose_suffix(canonical: str, suffixes: Sequence[str] = DEFAULT_SUFFIXES) -> str:
    return suffixes[zlib.crc32(canonical.encode("utf-8")) % len(suffixes)]


def apply_variants(identifier: str, variants: Iterable[int],
                   suffixes: Sequence[str] = DEFAULT_SUFFIXES,
                   reserved: Iterable[str] = ()) -> str:
    variants = set(variants)
    name = identifier
    if SUFFIX in variants:
        name += choose_suffix(identifier, suffixes)
    if UNDERLINE in variants:
        name += "_"
    if CAPITAL in variants:
        name = name[:1].upper() + name[1:]
    if name != identifier and name in set(reserved):
        raise CollisionError(f"{identifier!r} -> {name!r} shadows an existing name")
    return name


def strip_variants(identifier: str,
                   suffixes: Sequence[str] = DEFAULT_SUFFIXES) -> tuple[str, frozenset]:
    name, found = identifier, set()
    if name[:1].isupper():
        name = name[:1].lower() + name[1:]
        found.add(CAPITAL)
    if len(name) > 1 and name.endswith("_"):
        name = name[:-1]
        found.add(UNDERLINE)
    for suffix in suffixes:
        if name.endswith(suffix) and len(name) > len(suffix):
            name = name[:-len(suffix)]
            found.add(SUFFIX)
            break
    return name, frozenset(found)


def variant_states(identifier: str, suffixes: Sequence[str] = DEFAULT_SUFFIXES) -> tuple:
    _, found = strip_variants(identifier, suffixes)
    return tuple(int(v in found) for v in VARIANT_ORDER)


def is_clean_canonical(canonical: str, suffixes: Sequence[str] = DEFAULT_SUFFIXES) -> bool:
    """True when all eight variant spellings are legal and decompose back uniquely."""
    if not canonical.isidentifier() or not canonical[:1].islower():
        return False
    if not canonical[:1].isalpha() or not canonical[:1].isascii():
        return False
    for mask in range(8):
        chosen = {v for i, v in enumerate(VARIANT_ORDER) if mask >> i & 1}
        spelled = apply_variants(canonical, chosen, suffixes)
        if spelled in _RESERVED_WORDS or not spelled.isidentifier():
            return False
        if strip_variants(spelled, suffixes) != (canonical, frozenset(chosen)):
            return False
    return True
