"""Operadic trees: graphs with half-edges, corollas, grafting.

An ``OperadTree`` is planar: every internal vertex carries an ordering of
its children. The nested child structure is the primary representation;
the graph-with-half-edges view (internal vertices, internal edges, the
root and leaf half-edges, the incidence map) is derived from it, and the
preorder serialization of arities doubles as the canonical form used for
equality and hashing.

The trivial tree is the unique tree with no internal vertex: its single
half-edge is both root and leaf, and grafting it anywhere is a no-op.
"""

from __future__ import annotations

from typing import Sequence


class OperadTree:
    """A planar operadic tree.

    ``children`` is None for the trivial tree, otherwise the ordered
    tuple of subtrees below the root vertex (a subtree that is trivial
    is simply a leaf of this tree). A vertex with zero children is a
    stump: it contributes no leaves.
    """

    __slots__ = ("children", "_leaves", "_vertices", "_key", "_hash")

    def __init__(self, children: Sequence["OperadTree"] | None):
        if children is None:
            object.__setattr__(self, "children", None)
            object.__setattr__(self, "_leaves", 1)
            object.__setattr__(self, "_vertices", 0)
        else:
            kids = tuple(children)
            object.__setattr__(self, "children", kids)
            object.__setattr__(self, "_leaves", sum(k._leaves for k in kids))
            object.__setattr__(self, "_vertices", 1 + sum(k._vertices for k in kids))
        object.__setattr__(self, "_key", _serialize(self))
        object.__setattr__(self, "_hash", hash(self._key))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("OperadTree is immutable")

    @property
    def is_trivial(self) -> bool:
        return self.children is None

    @property
    def leaf_count(self) -> int:
        return self._leaves

    @property
    def vertex_count(self) -> int:
        return self._vertices

    def serialization(self) -> tuple[int, ...]:
        """Preorder arity sequence; -1 marks a leaf. Canonical form."""
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, OperadTree) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.is_trivial:
            return "OperadTree(|)"
        return f"OperadTree{self._key}"

    def vertex_arities(self) -> tuple[int, ...]:
        """Arity of each internal vertex, in preorder."""
        out: list[int] = []
        _preorder_arities(self, out)
        return tuple(out)

    # -- graph-with-half-edges view ------------------------------------

    def internal_vertices(self) -> tuple[int, ...]:
        return tuple(range(self._vertices))

    def internal_edges(self) -> frozenset[frozenset[int]]:
        edges: list[frozenset[int]] = []
        _collect_edges(self, _Counter(), edges)
        return frozenset(edges)

    def half_edges(self) -> tuple[str, tuple[str, ...]]:
        """(root half-edge id, ordered leaf half-edge ids).

        For the trivial tree the unique half-edge plays both roles, so
        the root id reappears as the single leaf.
        """
        if self.is_trivial:
            return "r", ("r",)
        leaves = tuple(f"l{i}" for i in range(1, self._leaves + 1))
        return "r", leaves

    def incidence(self) -> dict[str, int]:
        """half-edge id -> internal vertex. Empty for the trivial tree."""
        if self.is_trivial:
            return {}
        inc: dict[str, int] = {"r": 0}
        _collect_incidence(self, _Counter(), _Counter(start=1), inc)
        return inc

    def child_order(self) -> dict[int, tuple[tuple[str, int | str], ...]]:
        """vertex -> ordered children, tagged ('v', id) or ('leaf', id)."""
        order: dict[int, tuple] = {}
        _collect_order(self, _Counter(), _Counter(start=1), order)
        return order


class _Counter:
    __slots__ = ("n",)

    def __init__(self, start: int = 0):
        self.n = start

    def next(self) -> int:
        v = self.n
        self.n += 1
        return v


def _serialize(t: OperadTree) -> tuple[int, ...]:
    if t.children is None:
        return (-1,)
    out: list[int] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.children is None:
            out.append(-1)
        else:
            out.append(len(node.children))
            stack.extend(reversed(node.children))
    return tuple(out)


def _preorder_arities(t: OperadTree, out: list[int]) -> None:
    if t.children is None:
        return
    out.append(len(t.children))
    for k in t.children:
        _preorder_arities(k, out)


def _collect_edges(t: OperadTree, ids: _Counter, edges: list) -> None:
    if t.children is None:
        return
    me = ids.next()
    for k in t.children:
        if k.children is not None:
            edges.append(frozenset((me, ids.n)))
        _collect_edges(k, ids, edges)


def _collect_incidence(t: OperadTree, ids: _Counter, leaves: _Counter, inc: dict) -> None:
    me = ids.next()
    for k in t.children:
        if k.children is None:
            inc[f"l{leaves.next()}"] = me
        else:
            _collect_incidence(k, ids, leaves, inc)


def _collect_order(t: OperadTree, ids: _Counter, leaves: _Counter, order: dict) -> None:
    if t.children is None:
        return
    me = ids.next()
    row: list[tuple[str, int | str]] = []
    for k in t.children:
        if k.children is None:
            row.append(("leaf", f"l{leaves.next()}"))
        else:
            row.append(("v", ids.n))
            _collect_order(k, ids, leaves, order)
    order[me] = tuple(row)


TRIVIAL = OperadTree(None)


def trivial_tree() -> OperadTree:
    """The tree with no internal vertices; neutral for grafting."""
    return TRIVIAL


def corolla(n: int) -> OperadTree:
    """One internal vertex, n leaves (n = 0 gives the stump)."""
    if n < 0:
        raise ValueError("arity must be >= 0")
    return OperadTree((TRIVIAL,) * n)


def graft(host: OperadTree, args: Sequence[OperadTree]) -> OperadTree:
    """Replace the i-th leaf of ``host`` (planar order) by ``args[i]``.

    Grafting a trivial tree keeps the leaf in place; the resulting leaves
    are the concatenation of the argument leaves in host-leaf order.
    """
    if len(args) != host.leaf_count:
        raise ValueError(
            f"host has {host.leaf_count} leaves but {len(args)} arguments given"
        )
    it = iter(args)
    out = _graft_walk(host, it)
    return out


def _graft_walk(t: OperadTree, it) -> OperadTree:
    if t.children is None:
        return next(it)
    return OperadTree(tuple(_graft_walk(k, it) for k in t.children))
