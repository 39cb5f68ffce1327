"""Anchor discovery, canonical ordering, grouping, and state application."""

from __future__ import annotations

import ast
import copy
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from paritymark import rules as R
from paritymark.source_model import NodeAddress, SubjectProgram, parse, render, resolve, span_of

FORMAL, NATURAL = "formal", "natural"
NATURAL_GROUP = 3

_ANCHOR_FREE = (ast.AsyncFunctionDef, ast.AsyncFor, ast.AsyncWith, ast.Await)
_DYNAMIC_SCOPE = {"locals", "vars", "eval", "exec", "globals", "dir"}


class InsufficientAnchors(Exception):
    def __init__(self, channel: str, have: int, need: int):
        super().__init__(f"{channel}: have {have} anchors, need {need}")
        self.channel, self.have, self.need = channel, have, need


@dataclass(frozen=True)
class AnchorPoint:
    channel: str
    rule: int  # formal rule id, or natural variant id
    address: NodeAddress | str  # NodeAddress (formal) / canonical identifier (natural)
    state: int
    width: int = 1
    name: str = ""  # natural channel: identifier as currently spelled


@dataclass(frozen=True)
class AnchorIndex:
    formal: tuple[AnchorPoint, ...]
    natural: tuple[AnchorPoint, ...]
    variables: tuple[tuple[str, str], ...] = ()  # (canonical, current spelling)
    groups: dict = field(default_factory=dict, compare=False)

    def states(self, channel: str) -> list[int]:
        return [a.state for a in (self.formal if channel == FORMAL else self.natural)]

    def count(self, channel: str) -> int:
        return len(self.formal if channel == FORMAL else self.natural)


# ------------------------------------------------------------ formal sites

class _FormalWalker:
    def __init__(self, tree: ast.Module, rule_set: Sequence[R.FormalRule]):
        self.ctx = R.RuleContext.for_tree(tree)
        self.stmt_rules = [r for r in rule_set if r.level == "stmt"]
        self.expr_rules = [r for r in rule_set if r.level == "expr"]
        self.found: list[AnchorPoint] = []

    def _record(self, rule, path, node, state, width=1):
        address = NodeAddress(path, span_of(node))
        self.found.append(AnchorPoint(FORMAL, rule.rule_id, address, state, width))

    def body(self, stmts, path, fname, ctx):
        i = 0
        while i < len(stmts):
            here = path + ((fname, i),)
            for rule in self.stmt_rules:
                hit = rule.match(stmts, i, ctx)
                if hit:
                    width, state = hit
                    self._record(rule, here, stmts[i], state, width)
                    i += width
                    break
            else:
                self.children(stmts[i], here, ctx)
                i += 1

    def children(self, node, path, ctx):
        if isinstance(node, _ANCHOR_FREE):
            return
        if isinstance(node, (ast.FunctionDef, ast.ClassDef)):
            inner = ctx.within(node)
        else:
            inner = ctx
        for name, value in ast.iter_fields(node):
            if isinstance(value, list) and value and isinstance(value[0], ast.stmt):
                self.body(value, path, name, inner)
            elif isinstance(value, ast.AST):
                self.expr(value, path + ((name, None),), ctx)
            elif isinstance(value, list):
                for i, item in enumerate(value):
                    if isinstance(item, ast.AST):
                        self.expr(item, path + ((name, i),), ctx)

    def expr(self, node, path, ctx):
        if isinstance(node, _ANCHOR_FREE):
            return
        if isinstance(node, ast.expr):
            for rule in self.expr_rules:
                state = rule.match(node, ctx)
                if state is not None:
                    self._record(rule, path, node, state)
                    return
        self.children(node, path, ctx)


def formal_anchors(tree: ast.Module, rule_set: Sequence[R.FormalRule]) -> list[AnchorPoint]:
    walker = _FormalWalker(tree, rule_set)
    walker.children(tree, (), walker.ctx)
    return sorted(walker.found, key=lambda a: (a.rule, a.address.span[:2]))


# ------------------------------------------------------- natural channel

@dataclass
class _Scope:
    node: ast.AST
    kind: str  # module | function | class | comprehension
    parent: "_Scope | None"
    bound: set = field(default_factory=set)


class _ScopeAnalysis:
    """Resolve every ``Name`` to the scope that binds it."""

    _COMPS = (ast.ListComp, ast.SetComp, ast.DictComp, ast.GeneratorExp)

    def __init__(self, tree: ast.Module):
        self.occurrences: list[tuple[ast.Name, _Scope]] = []
        self.blocked: set[str] = set()
        self.dynamic = False
        root = _Scope(tree, "module", None)
        self._visit_body(tree.body, root)
        self.resolved = {id(n): self._resolve(n.id, s) for n, s in self.occurrences}

    def _visit_body(self, stmts, scope):
        for stmt in stmts:
            self._visit(stmt, scope)

    def _visit(self, node, scope):
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef, ast.Lambda)):
            args = node.args
            every = args.posonlyargs + args.args + args.kwonlyargs + [args.vararg, args.kwarg]
            outer = args.defaults + [d for d in args.kw_defaults if d is not None]
            outer += [a.annotation for a in every if a is not None and a.annotation]
            if not isinstance(node, ast.Lambda):
                outer += node.decorator_list + ([node.returns] if node.returns else [])
            for expr in outer:
                self._visit(expr, scope)
            if not isinstance(node, ast.Lambda):
                scope.bound.add(node.name)
                self.blocked.add(node.name)
            inner = _Scope(node, "function", scope)
            for a in every:
                if a is not None:
                    inner.bound.add(a.arg)
                    self.blocked.add(a.arg)
            if isinstance(node, ast.Lambda):
                self._visit(node.body, inner)
            else:
                self._visit_body(node.body, inner)
            return
        if isinstance(node, ast.ClassDef):
            for expr in node.bases + node.keywords + node.decorator_list:
                self._visit(expr, scope)
            scope.bound.add(node.name)
            self.blocked.add(node.name)
            self._visit_body(node.body, _Scope(node, "class", scope))
            return
        if isinstance(node, self._COMPS):
            gens = node.generators
            self._visit(gens[0].iter, scope)
            inner = _Scope(node, "comprehension", scope)
            for i, gen in enumerate(gens):
                self._visit(gen.target, inner)
                if i:
                    self._visit(gen.iter, inner)
                for cond in gen.ifs:
                    self._visit(cond, inner)
            for part in ("elt", "key", "value"):
                if hasattr(node, part):
                    self._visit(getattr(node, part), inner)
            return
        if isinstance(node, ast.Name):
            if not isinstance(node.ctx, ast.Load):
                scope.bound.add(node.id)
            elif node.id in _DYNAMIC_SCOPE:
                self.dynamic = True
            self.occurrences.append((node, scope))
            return
        if isinstance(node, (ast.Global, ast.Nonlocal)):
            self.blocked.update(node.names)
        elif isinstance(node, ast.NamedExpr):
            self.blocked.add(node.target.id)
        elif isinstance(node, ast.alias):
            self.blocked.add((node.asname or node.name).split(".")[0])
        elif isinstance(node, ast.ExceptHandler) and node.name:
            self.blocked.add(node.name)
        elif isinstance(node, (ast.MatchAs, ast.MatchStar)) and node.name:
            self.blocked.add(node.name)
        elif isinstance(node, ast.MatchMapping) and node.rest:
            self.blocked.add(node.rest)
        for child in ast.iter_child_nodes(node):
            self._visit(child, scope)

    @staticmethod
    def _resolve(name, scope):
        if name in scope.bound:
            return scope
        cur = scope.parent
        while cur is not None:
            if cur.kind != "class" and name in cur.bound:
                return cur
            cur = cur.parent
        return None

    @staticmethod
    def _local(scope: _Scope | None) -> bool:
        # a comprehension outside any function would be a plain global in loop form
        while scope is not None and scope.kind == "comprehension":
            scope = scope.parent
        return scope is not None and scope.kind == "function"

    def renameable(self) -> set[str]:
        """Names whose every occurrence is a local of a function, or of a comprehension in one."""
        if self.dynamic:
            return set()
        ok: dict[str, bool] = {}
        for node, _ in self.occurrences:
            good = self._local(self.resolved[id(node)])
            ok[node.id] = ok.get(node.id, True) and good
        return {n for n, good in ok.items() if good and n not in self.blocked}


def _natural_order(node: ast.AST) -> Iterator[ast.Name]:
    """Pre-order walk that visits comprehension generators before the element."""
    if isinstance(node, ast.Name):
        yield node
        return
    if isinstance(node, (ast.ListComp, ast.SetComp, ast.GeneratorExp, ast.DictComp)):
        children = list(node.generators) + [getattr(node, p) for p in ("elt", "key", "value")
                                            if hasattr(node, p)]
    else:
        children = list(ast.iter_child_nodes(node))
    for child in children:
        yield from _natural_order(child)


def all_identifiers(tree: ast.Module) -> set[str]:
    ids = set(R.identifiers(tree))
    for node in ast.walk(tree):
        if isinstance(node, (ast.MatchAs, ast.MatchStar)) and node.name:
            ids.add(node.name)
        elif isinstance(node, ast.MatchMapping) and node.rest:
            ids.add(node.rest)
    return ids


def natural_variables(tree: ast.Module,
                      suffixes: Sequence[str] = R.DEFAULT_SUFFIXES) -> list[tuple[str, str]]:
    """Eligible variables as ``(canonical, spelling)`` in first-occurrence order."""
    renameable = _ScopeAnalysis(tree).renameable()
    by_canonical: dict[str, set[str]] = {}
    for name in all_identifiers(tree):
        by_canonical.setdefault(R.strip_variants(name, suffixes)[0], set()).add(name)
    eligible = {}
    for canonical, spellings in by_canonical.items():
        if len(spellings) != 1:
            continue
        (name,) = spellings
        if name in renameable and R.is_clean_canonical(canonical, suffixes):
            eligible[name] = canonical
    order, seen = [], set()
    for node in _natural_order(tree):
        if node.id in eligible and node.id not in seen:
            seen.add(node.id)
            order.append((eligible[node.id], node.id))
    return order


def identify_anchors(program: SubjectProgram, rule_set: Sequence[R.FormalRule] | None = None,
                     suffixes: Sequence[str] = R.DEFAULT_SUFFIXES) -> AnchorIndex:
    if rule_set is None:
        rule_set = R.formal_rule_set()
    formal = formal_anchors(program.tree, rule_set)
    variables = natural_variables(program.tree, suffixes)
    natural = []
    for canonical, spelling in variables:
        states = R.variant_states(spelling, suffixes)
        for variant, state in zip(R.VARIANT_ORDER, states):
            natural.append(AnchorPoint(NATURAL, variant, canonical, state, name=spelling))
    return AnchorIndex(tuple(formal), tuple(natural), tuple(variables))


def group_anchors(index: AnchorIndex, alpha: int, q: int,
                  channel: str = FORMAL) -> list[list[int]]:
    """First ``q`` consecutive blocks of ``alpha`` anchor positions."""
    if channel == NATURAL and alpha != NATURAL_GROUP:
        raise ValueError("natural-channel groups are the three variants of one variable")
    have, need = index.count(channel), alpha * q
    if have < need:
        raise InsufficientAnchors(channel, have, need)
    groups = [list(range(g * alpha, (g + 1) * alpha)) for g in range(q)]
    index.groups[channel] = groups
    return groups


# ------------------------------------------------------------ application

def _path_key(address: NodeAddress):
    return tuple((name, -1 if i is None else i) for name, i in address.path)


def apply_states(program: SubjectProgram, index: AnchorIndex,
                 formal_states: dict[int, int] | None = None,
                 natural_states: dict[int, int] | None = None,
                 suffixes: Sequence[str] = R.DEFAULT_SUFFIXES) -> SubjectProgram:
    """Drive anchors to target states; keys are positions in the index's channel lists.

    Anchors without an entry are left as found.
    """
    tree = copy.deepcopy(program.tree)
    todo = [(index.formal[i], s) for i, s in (formal_states or {}).items()
            if index.formal[i].state != s]
    for anchor, state in sorted(todo, key=lambda t: _path_key(t[0].address), reverse=True):
        rule = R.rule_by_id(anchor.rule)
        *head, (fname, i) = anchor.address.path
        parent = resolve(tree, tuple(head))
        if i is None:
            setattr(parent, fname, rule.rewrite([getattr(parent, fname)], state)[0])
        else:
            seq = getattr(parent, fname)
            seq[i:i + anchor.width] = rule.rewrite(seq[i:i + anchor.width], state)

    renames = {}
    wanted = dict(natural_states or {})
    for v, (canonical, spelling) in enumerate(index.variables):
        bits = [index.natural[3 * v + j].state for j in range(3)]
        changed = False
        for j in range(3):
            if 3 * v + j in wanted and wanted[3 * v + j] != bits[j]:
                bits[j] = wanted[3 * v + j]
                changed = True
        if changed:
            chosen = {var for var, b in zip(R.VARIANT_ORDER, bits) if b}
            renames[spelling] = R.apply_variants(canonical, chosen, suffixes)
    if renames:
        for node in ast.walk(tree):
            if isinstance(node, ast.Name) and node.id in renames:
                node.id = renames[node.id]
    ast.fix_missing_locations(tree)
    return parse(render(tree), program.path)


def rename_identifiers(program: SubjectProgram, mapping: dict[str, str]) -> SubjectProgram:
    """Consistently rename ``Name`` occurrences (caller guarantees safety)."""
    tree = copy.deepcopy(program.tree)
    for node in ast.walk(tree):
        if isinstance(node, ast.Name) and node.id in mapping:
            node.id = mapping[node.id]
    return parse(render(tree), program.path)


def renameable_names(program: SubjectProgram) -> set[str]:
    return _ScopeAnalysis(program.tree).renameable()


def anchor_summary(index: AnchorIndex) -> Counter:
    return Counter(f"R{a.rule}" for a in index.formal)
