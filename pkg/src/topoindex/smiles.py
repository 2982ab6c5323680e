"""A recursive-descent parser for the carbon-only, acyclic SMILES subset.

Only ``C``, ``(`` and ``)`` are accepted. Hydrogens are implicit, so a string
maps to its carbon skeleton: vertex ``i`` is the ``i``-th ``C`` read left to
right.

Grammar::

    alkane := atom chain
    chain  := (branch | atom)*
    branch := '(' atom chain ')'

An atom bonds to the most recent atom at its own nesting level, or to the
atom that opened the enclosing branch.
"""

from __future__ import annotations

from .graph import Graph, GraphError, degrees, is_tree
from .trees import centroids, rooted_forms

MAX_VALENCE = 4


class SmilesError(ValueError):
    """Malformed alkane SMILES. ``position`` is the 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (column {position})")
        self.message = message
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.edges: list[tuple[int, int]] = []
        self.valence: list[int] = []

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def fail(self, message: str, at: int | None = None):
        raise SmilesError(message, (self.pos if at is None else at) + 1)

    def atom(self, attach: int | None) -> int:
        ch = self.peek()
        if ch != "C":
            if ch is None:
                self.fail("expected 'C', found end of input")
            if ch in "()":
                self.fail(f"expected 'C', found {ch!r}")
            self.fail(f"illegal character {ch!r}")
        idx = len(self.valence)
        self.valence.append(0)
        if attach is not None:
            for v in (attach, idx):
                self.valence[v] += 1
                if self.valence[v] > MAX_VALENCE:
                    self.fail(f"valence exceeds {MAX_VALENCE} at atom {v + 1}")
            self.edges.append((attach, idx))
        self.pos += 1
        return idx

    def chain(self, current: int) -> None:
        while True:
            ch = self.peek()
            if ch == "(":
                self.branch(current)
            elif ch == "C":
                current = self.atom(current)
            else:
                return

    def branch(self, attach: int) -> None:
        open_at = self.pos
        self.pos += 1
        if self.peek() == ")":
            self.fail("empty branch '()'", open_at)
        if self.peek() is None:
            self.fail("unbalanced parentheses: '(' is never closed", open_at)
        first = self.atom(attach)
        self.chain(first)
        if self.peek() != ")":
            if self.peek() is None:
                self.fail("unbalanced parentheses: '(' is never closed", open_at)
            self.fail(f"illegal character {self.peek()!r}")
        self.pos += 1

    def alkane(self) -> Graph:
        if not self.text:
            self.fail("empty input")
        if self.peek() == "(":
            self.fail("branch before any atom")
        first = self.atom(None)
        self.chain(first)
        ch = self.peek()
        if ch is not None:
            if ch == ")":
                self.fail("unbalanced parentheses: unmatched ')'")
            self.fail(f"illegal character {ch!r}")
        return Graph(len(self.valence), self.edges)


def parse_alkane(text: str) -> Graph:
    """Parse a carbon-skeleton SMILES string into a tree.

    >>> parse_alkane("CC(C)C").edges
    ((0, 1), (1, 2), (1, 3))
    """
    return _Parser(text).alkane()


def render_alkane(g: Graph) -> str:
    """Canonical SMILES for a tree of maximum degree 4.

    The tree is hung from its centroid (the one with the smaller canonical
    string when there are two) and the string starts at a deepest leaf of
    the heaviest centroid branch, so chains read left to right. Siblings are
    ordered by (height, canonical form) with the tallest written last, outside
    parentheses.
    """
    if not is_tree(g):
        raise GraphError("only trees can be rendered as alkanes")
    if max(degrees(g), default=0) > MAX_VALENCE:
        raise GraphError(f"vertex degree exceeds {MAX_VALENCE}")
    if g.n == 1:
        return "C"
    root = min(centroids(g), key=lambda c: rooted_forms(g, c)[0][c])
    forms, heights, parent = rooted_forms(g, root)

    def key(w: int) -> tuple[int, str]:
        return heights[w], forms[w]

    start = root
    while True:
        kids = [w for w in g.neighbors(start) if w != parent[start]]
        if not kids:
            break
        start = max(kids, key=key)

    # re-hang from the chosen leaf; sibling order needs forms seen from there
    forms, heights, parent = rooted_forms(g, start)
    out: list[str] = []
    stack: list[object] = [start]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        v = item
        out.append("C")
        kids = sorted((w for w in g.neighbors(v) if w != parent[v]), key=key)
        # pushed in reverse so they are emitted in order; last kid unbracketed
        if kids:
            stack.append(kids[-1])
            for w in reversed(kids[:-1]):
                stack.extend([")", w, "("])
    return "".join(out)
