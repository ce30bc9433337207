"""The free operad on a generator signature.

Basis elements are *terms*: planar decorated trees together with a leaf
label word. A term whose underlying tree is ``B`` and whose word is ``w``
is the abstract operation obtained by letting ``w`` act on the plain
planar composite of the decorating generators, so the label at planar
position ``p`` names the input that the leaf at ``p`` routes into the
underlying tree.

Composition ``gamma`` grafts argument ``j`` onto the underlying input
``w(j)`` of the host and relabels: the composite word is exactly the
block composition of the host word with the argument words. The right
symmetric-group action rewrites the word alone. Linear combinations with
rational coefficients extend everything bilinearly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from . import trees
from .permutations import Permutation, block_word
from .trees import OperadTree


@dataclass(frozen=True)
class Signature:
    """Generator names with arities, plus the composition mode.

    ``mode`` is ``"planar"`` (label words pinned to the identity) or
    ``"symmetric"`` (arbitrary label words, acted on by S_n).
    """

    generators: tuple[tuple[str, int], ...]
    mode: str = "symmetric"

    def __post_init__(self):
        names = [g for g, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if self.mode not in ("planar", "symmetric"):
            raise ValueError(f"mode must be 'planar' or 'symmetric', got {self.mode!r}")
        for g, k in self.generators:
            if k < 0:
                raise ValueError(f"generator {g} has negative arity {k}")

    def arity_of(self, name: str) -> int:
        for g, k in self.generators:
            if g == name:
                return k
        raise KeyError(f"unknown generator {name!r}")

    def names(self) -> tuple[str, ...]:
        return tuple(g for g, _ in self.generators)

    def finite_basis(self) -> bool:
        """True when every arity is >= 2, so each T(P)(n) is finite."""
        return all(k >= 2 for _, k in self.generators)


class Term:
    """A decorated leaf-labelled planar tree; a free-operad basis element.

    ``decoration`` lists the generator name at each internal vertex in
    preorder; ``labels`` is the word read along the planar leaf positions.
    The trivial term (trivial tree, no decoration, word ``(1,)``) is the
    operad unit.
    """

    __slots__ = ("shape", "decoration", "labels", "_key", "_hash")

    def __init__(self, shape: OperadTree, decoration: Sequence[str],
                 labels: Sequence[int]):
        decoration = tuple(decoration)
        labels = tuple(int(i) for i in labels)
        if len(decoration) != shape.vertex_count:
            raise ValueError(
                f"{shape.vertex_count} vertices but {len(decoration)} decorations"
            )
        if sorted(labels) != list(range(1, shape.leaf_count + 1)):
            raise ValueError(
                f"labels {list(labels)} are not a bijection on 1..{shape.leaf_count}"
            )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "decoration", decoration)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_key", (shape.serialization(), decoration, labels))
        object.__setattr__(self, "_hash", hash(self._key))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Term is immutable")

    @property
    def arity(self) -> int:
        return self.shape.leaf_count

    @property
    def key(self):
        """Canonical sort/equality key: decorated preorder plus word."""
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Term) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .termio import print_term  # late import, cosmetic only
        return f"Term({print_term(self)})"

    def is_trivial(self) -> bool:
        return self.shape.is_trivial


TRIVIAL_TERM_SHAPE = trees.trivial_tree()


def trivial_term() -> Term:
    return Term(TRIVIAL_TERM_SHAPE, (), (1,))


def gen_corolla(sig: Signature, name: str) -> Term:
    """The corolla of a generator with the identity word."""
    k = sig.arity_of(name)
    return Term(trees.corolla(k), (name,), range(1, k + 1))


def weight(t: Term) -> int:
    """Number of internal (generator-decorated) vertices."""
    return t.shape.vertex_count


# -- nested view used by composition and printing ----------------------

LEAF = None


def nested(t: Term):
    """Recursive view: (name, children) nodes with LEAF at the leaves."""
    deco = iter(t.decoration)
    return _nest(t.shape, deco)


def _nest(shape: OperadTree, deco):
    if shape.children is None:
        return LEAF
    name = next(deco)
    return (name, tuple(_nest(k, deco) for k in shape.children))


def from_nested(node, labels: Sequence[int]) -> Term:
    """Inverse of ``nested``: rebuild a Term from the recursive view."""
    shape, deco = _unnest(node)
    return Term(shape, deco, labels)


def _unnest(node):
    if node is LEAF:
        return trees.trivial_tree(), ()
    name, kids = node
    shapes = []
    deco = [name]
    for k in kids:
        s, d = _unnest(k)
        shapes.append(s)
        deco.extend(d)
    return OperadTree(tuple(shapes)), tuple(deco)


def _splice(node, replacements):
    """Replace the leaves of ``node`` (planar order) from ``replacements``."""
    if node is LEAF:
        return next(replacements)
    name, kids = node
    return (name, tuple(_splice(k, replacements) for k in kids))


# -- operad structure ---------------------------------------------------

def gamma(host: Term, args: Sequence[Term]) -> Term:
    """Total composition: plug ``args[j-1]`` into input ``j`` of ``host``.

    Input ``j`` of the host operation sits at the underlying planar leaf
    labelled by the host word, so the argument tree is grafted there; the
    composite word is the block composition of the words.
    """
    n = host.arity
    if len(args) != n:
        raise ValueError(f"host arity {n} but {len(args)} arguments")
    if n == 0:
        raise ValueError("cannot compose into an operation with no inputs")
    # argument j grafts onto underlying input w(j): the leaf at planar
    # position p receives the argument whose index maps to p under w
    by_position: list[Term | None] = [None] * n
    for j, target in enumerate(host.labels):
        by_position[target - 1] = args[j]
    spliced = _splice(nested(host), iter(nested(a) for a in by_position))
    labels = block_word(host.labels, [a.labels for a in args])
    return from_nested(spliced, labels)


def circ(host: Term, i: int, arg: Term) -> Term:
    """Partial composition: insert ``arg`` at input ``i`` of ``host``."""
    n = host.arity
    if not 1 <= i <= n:
        raise ValueError(f"slot {i} out of range for arity {n}")
    args = [trivial_term()] * n
    args[i - 1] = arg
    return gamma(host, args)


def act(t: Term, s: Permutation) -> Term:
    """Right action: the word becomes ``w o s``; the tree is untouched."""
    if s.degree != t.arity:
        raise ValueError(f"degree {s.degree} acting on arity {t.arity}")
    w = t.labels
    return Term(t.shape, t.decoration, tuple(w[s(k) - 1] for k in range(1, s.degree + 1)))


# -- linear combinations ------------------------------------------------

class LinComb:
    """A finite rational combination of terms of one arity.

    Zero coefficients are never stored; the zero element keeps its arity
    so that sums stay homogeneous.
    """

    __slots__ = ("arity", "terms", "_hash")

    def __init__(self, arity: int, terms: Iterable[tuple[Term, Fraction]] = ()):
        acc: dict[Term, Fraction] = {}
        for t, c in terms:
            if t.arity != arity:
                raise ValueError(
                    f"term of arity {t.arity} in a combination of arity {arity}"
                )
            c = Fraction(c)
            if not c:
                continue
            new = acc.get(t, _ZERO) + c
            if new:
                acc[t] = new
            else:
                acc.pop(t, None)
        items = tuple(sorted(acc.items(), key=lambda tc: tc[0].key))
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", items)
        object.__setattr__(self, "_hash", hash((arity, items)))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("LinComb is immutable")

    @staticmethod
    def of(t: Term, coeff: Fraction | int = 1) -> "LinComb":
        return LinComb(t.arity, [(t, Fraction(coeff))])

    def coeff(self, t: Term) -> Fraction:
        for u, c in self.terms:
            if u == t:
                return c
        return _ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LinComb") -> "LinComb":
        if other.arity != self.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
        return LinComb(self.arity, list(self.terms) + list(other.terms))

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-1) * other

    def __rmul__(self, scale) -> "LinComb":
        scale = Fraction(scale)
        return LinComb(self.arity, [(t, c * scale) for t, c in self.terms])

    def __neg__(self) -> "LinComb":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinComb) and self.arity == other.arity
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .termio import print_lincomb
        return f"LinComb({print_lincomb(self)})"


_ZERO = Fraction(0)


def lin_gamma(host: LinComb, args: Sequence[LinComb]) -> LinComb:
    """Multilinear extension of ``gamma`` to combinations."""
    if len(args) != host.arity:
        raise ValueError(f"host arity {host.arity} but {len(args)} arguments")
    out_arity = sum(a.arity for a in args)
    pieces: list[tuple[Term, Fraction]] = []
    for t, c in host.terms:
        for combo in itertools.product(*(a.terms for a in args)):
            coeff = c
            for _, ac in combo:
                coeff *= ac
            pieces.append((gamma(t, [u for u, _ in combo]), coeff))
    return LinComb(out_arity, pieces)


def lin_circ(host: LinComb, i: int, arg: LinComb) -> LinComb:
    out_arity = host.arity - 1 + arg.arity
    pieces = []
    for t, c in host.terms:
        for u, d in arg.terms:
            pieces.append((circ(t, i, u), c * d))
    return LinComb(out_arity, pieces)


def lin_act(x: LinComb, s: Permutation) -> LinComb:
    return LinComb(x.arity, [(act(t, s), c) for t, c in x.terms])


# -- basis enumeration ---------------------------------------------------

def enumerate_basis(sig: Signature, n: int) -> list[Term]:
    """All basis terms of arity ``n``, in canonical serialization order.

    Requires every generator arity >= 2; with 0- or 1-ary generators the
    basis would be infinite. The trivial term appears exactly when n = 1.
    """
    if not sig.finite_basis():
        raise ValueError(
            "basis enumeration needs all generator arities >= 2 "
            f"(signature has {dict(sig.generators)})"
        )
    if n < 1:
        raise ValueError("arity must be >= 1")
    return list(_basis(sig, n))


@lru_cache(maxsize=None)
def _basis(sig: Signature, n: int) -> tuple[Term, ...]:
    shapes = _decorated_shapes(sig, n)
    out: list[Term] = []
    if sig.mode == "planar":
        idword = tuple(range(1, n + 1))
        for node in shapes:
            out.append(from_nested(node, idword))
    else:
        for node in shapes:
            for word in itertools.permutations(range(1, n + 1)):
                out.append(from_nested(node, word))
    out.sort(key=lambda t: t.key)
    return tuple(out)


@lru_cache(maxsize=None)
def _decorated_shapes(sig: Signature, n: int):
    """Decorated planar trees with ``n`` leaves (labels not yet chosen)."""
    results = []
    if n == 1:
        results.append(LEAF)
    for name, k in sig.generators:
        if k < 2 or k > n:
            continue
        for parts in _compositions(n, k):
            for kids in itertools.product(
                    *(_decorated_shapes(sig, p) for p in parts)):
                results.append((name, kids))
    return tuple(results)


def _compositions(n: int, k: int):
    """Ordered k-tuples of positive integers summing to n."""
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def basis_index(sig: Signature, n: int) -> Mapping[Term, int]:
    return _basis_index(sig, n)


@lru_cache(maxsize=None)
def _basis_index(sig: Signature, n: int) -> dict[Term, int]:
    return {t: i for i, t in enumerate(_basis(sig, n))}


TermOrLinComb = Union[Term, LinComb]
