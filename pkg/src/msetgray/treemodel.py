"""Explicit enumeration trees: structural oracle and diagram source.

The lexicographic tree of an object set is the trie of its count vectors:
a node at level i carries one feasible value of a[i], children are ordered
ascending, and the leaves read left to right spell the lexicographic
order.  Twisting the tree reverses the children of odd-parity nodes so
that the leaves spell an adjacent order instead.

Parities are assigned level by level, top-down, after the reversals of
the level above have been applied, alternating even/odd across the nodes
of each level from the left.  Two policies are supported:

* GLOBAL: every node takes a parity and advances the alternation.  The
  leaf order then equals the direction-flipping recursive generator,
  whose per-level flag flips on every visit.

* SKIP_SINGLE_CHILD: nodes with one child get no parity (reversing one
  child is vacuous) and do not advance the alternation -- except the
  leftmost node of a level, which counts as even whether or not it bears
  a parity.  That seeding mirrors the loopless engine, whose direction
  flags only flip when a level with a genuine sibling choice exhausts,
  and whose levels right of the start level begin on their way back.
  The leaf order then equals the engine's emission order.

Trees here are oracle-scale only (node counts are capped); the engine
never materializes them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .core import MultisetSpec, OracleLimitError, validate

TREE_NODE_LIMIT = 1_000_000
DOT_NODE_LIMIT = 50_000

EVEN = "even"
ODD = "odd"


class ParityMode(Enum):
    GLOBAL = "global"
    SKIP_SINGLE_CHILD = "skip-single-child"


@dataclass
class LexTreeNode:
    """One trie node: branch value, depth, ordered children, parity tag."""

    label: Optional[int]  # None at the root
    level: int
    children: list["LexTreeNode"] = field(default_factory=list)
    parity: Optional[str] = None  # EVEN | ODD | None

    def is_leaf(self) -> bool:
        return not self.children


def build_lexico_tree(
    spec: MultisetSpec, node_limit: int = TREE_NODE_LIMIT
) -> LexTreeNode:
    """Trie of all count vectors, children ascending by label."""
    validate(spec)
    n, k = spec.n, spec.k
    m = (0,) + spec.m
    b = [0] * (n + 2)
    for i in range(n, 0, -1):
        b[i] = b[i + 1] + m[i]

    count = 0

    def grow(level: int, rem: int) -> LexTreeNode:
        nonlocal count
        count += 1
        if count > node_limit:
            raise OracleLimitError(f"tree exceeds {node_limit} nodes")
        node = LexTreeNode(label=None, level=level)
        if level == n:
            return node
        i = level + 1
        lower = max(rem - b[i + 1], 0)
        upper = min(m[i], rem)
        for v in range(lower, upper + 1):
            child = grow(i, rem - v)
            child.label = v
            node.children.append(child)
        return node

    return grow(0, k)


def _copy(node: LexTreeNode) -> LexTreeNode:
    return LexTreeNode(
        label=node.label,
        level=node.level,
        children=[_copy(c) for c in node.children],
        parity=node.parity,
    )


def _assign_parities(nodes: list[LexTreeNode], mode: ParityMode) -> None:
    """Alternate even/odd across one level, left to right."""
    parity = 0  # 0 = even, 1 = odd
    for idx, node in enumerate(nodes):
        if mode is ParityMode.GLOBAL:
            node.parity = EVEN if parity == 0 else ODD
            parity ^= 1
        elif len(node.children) > 1:
            node.parity = EVEN if parity == 0 else ODD
            parity ^= 1
        else:
            node.parity = None
            if idx == 0:
                # Leftmost (first-path) node counts as even even when it
                # carries no parity of its own.
                parity ^= 1


def twist(tree: LexTreeNode, mode: ParityMode) -> LexTreeNode:
    """New tree with odd-parity child lists reversed, parities recorded.

    Levels are processed top-down: reversals at level L are applied before
    parities are assigned to level L+1 (in post-reversal order).
    """
    root = _copy(tree)
    level_nodes = [root]
    _assign_parities(level_nodes, mode)
    while level_nodes:
        for node in level_nodes:
            if node.parity == ODD:
                node.children.reverse()
        level_nodes = [c for node in level_nodes for c in node.children]
        if level_nodes:
            _assign_parities(level_nodes, mode)
    return root


def leaf_sequence(tree: LexTreeNode) -> list[tuple[int, ...]]:
    """Root-to-leaf label paths, leaves visited in child order."""
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def walk(node: LexTreeNode) -> None:
        if node.label is not None:
            path.append(node.label)
        if node.is_leaf():
            out.append(tuple(path))
        else:
            for child in node.children:
                walk(child)
        if node.label is not None:
            path.pop()

    walk(tree)
    return out


def iter_nodes(tree: LexTreeNode) -> Iterator[LexTreeNode]:
    """Depth-first preorder over all nodes."""
    stack = [tree]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def export_dot(tree: LexTreeNode, node_limit: int = DOT_NODE_LIMIT) -> str:
    """DOT digraph of a (possibly twisted) tree.

    Node names concatenate the level path ("r", "r_0", "r_0_2", ...), so
    output is deterministic; ordering=out preserves twisted child order.
    Labels carry branch value, level, and parity.
    """
    total = sum(1 for _ in iter_nodes(tree))
    if total > node_limit:
        raise OracleLimitError(f"{total} nodes exceed DOT limit {node_limit}")

    lines = [
        "digraph enumeration_tree {",
        "  graph [ordering=out];",
        '  node [shape=circle, fontsize=10];',
    ]

    def name(path: list[int]) -> str:
        return "r" if not path else "r_" + "_".join(str(v) for v in path)

    def emit(node: LexTreeNode, path: list[int]) -> None:
        tag = node.parity if node.parity else "-"
        text = "*" if node.label is None else str(node.label)
        lines.append(f'  {name(path)} [label="{text}\\nL{node.level} {tag}"];')
        for child in node.children:
            child_path = path + [child.label]
            lines.append(f"  {name(path)} -> {name(child_path)};")
            emit(child, child_path)

    emit(tree, [])
    lines.append("}")
    return "\n".join(lines) + "\n"
