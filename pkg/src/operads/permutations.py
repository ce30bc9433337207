"""Symmetric groups S_n with their operadic block structure.

A permutation is stored in one-line form: ``word[i-1]`` is the image of
``i``. Composition follows the convention ``(s * t)(i) = s(t(i))``; every
action elsewhere in the package is stated relative to this choice.

Besides the group operations this module provides the block composition
``s o (t_1, ..., t_n)``: each ``t_j`` permutes within its own consecutive
input block, and the block at input position ``j`` lands at output block
position ``s(j)``. Partial composition inserts a single block.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """An element of S_n in one-line notation, n >= 1. Immutable."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        w = tuple(int(i) for i in word)
        if not w:
            raise ValueError("degree 0 permutations are not represented")
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation of 1..{len(w)}: {list(w)}")
        object.__setattr__(self, "word", w)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise ValueError(f"index {i} out of range for degree {len(self.word)}")
        return self.word[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return "[" + ",".join(str(i) for i in self.word) + "]"

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.word))


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    """The product s o t, acting as (s o t)(i) = s(t(i))."""
    if s.degree != t.degree:
        raise ValueError(f"degree mismatch: {s.degree} vs {t.degree}")
    return Permutation(s.word[j - 1] for j in t.word)


def inverse(s: Permutation) -> Permutation:
    out = [0] * s.degree
    for i, v in enumerate(s.word):
        out[v - 1] = i + 1
    return Permutation(out)


def block_word(host: Sequence[int], blocks: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Raw block composition on words; blocks may be empty.

    Block ``j`` (consecutive input positions, permuted within by
    ``blocks[j]``) is sent to output block position ``host[j]``. Used
    directly by tree composition, where empty blocks arise from 0-ary
    vertices; the public ``block_compose`` wraps it with degree checks.
    """
    n = len(host)
    sizes = [len(b) for b in blocks]
    inv = [0] * n
    for j, v in enumerate(host):
        inv[v - 1] = j
    # out_offsets[k] = total size of the blocks landing before output slot k+1
    out_offsets = [0] * n
    acc = 0
    for k in range(n):
        out_offsets[k] = acc
        acc += sizes[inv[k]]
    out = []
    for j, b in enumerate(blocks):
        base = out_offsets[host[j] - 1]
        out.extend(base + v for v in b)
    return tuple(out)


def block_compose(s: Permutation, blocks: Sequence[Permutation]) -> Permutation:
    """Operadic composition s o (t_1, ..., t_n) in S_{l_1 + ... + l_n}."""
    if len(blocks) != s.degree:
        raise ValueError(
            f"expected {s.degree} blocks for a degree-{s.degree} permutation, "
            f"got {len(blocks)}"
        )
    return Permutation(block_word(s.word, [b.word for b in blocks]))


def partial_compose(s: Permutation, i: int, t: Permutation) -> Permutation:
    """Insertion s o_i t in S_{m+n-1}.

    Equals block composition with the identity in every slot except
    slot ``i``, which holds ``t``.
    """
    if not 1 <= i <= s.degree:
        raise ValueError(f"slot {i} out of range for degree {s.degree}")
    blocks = [identity(1)] * s.degree
    blocks[i - 1] = t
    return block_compose(s, blocks)


def equivariance_twist(s: Permutation, perms: Sequence[Permutation]) -> Permutation:
    """The permutation re-labelling a composite after acting by ``s``.

    In a symmetric operad, composing the acted family
    ``(x . s) o (y_{s(1)} . t_{s(1)}, ..., y_{s(n)} . t_{s(n)})`` returns the
    plain composite ``x o (y_1, ..., y_n)`` acted by this twist, which is
    the block composition of ``s`` with the ``t``'s read off in the order
    ``s(1), ..., s(n)``. ``perms[k-1]`` is the permutation attached to the
    k-th family member ``y_k``.
    """
    if len(perms) != s.degree:
        raise ValueError(
            f"expected {s.degree} permutations, got {len(perms)}"
        )
    return block_compose(s, [perms[s(j) - 1] for j in range(1, s.degree + 1)])
