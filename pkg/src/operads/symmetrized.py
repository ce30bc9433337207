"""Rational combinations of permutations under block composition.

Degree n combinations form the group algebra of S_n; composing basis
permutations by blocks and extending bilinearly makes the whole family
an operad, the symmetrization of the one-generator associative structure.
Used without the right regular action it is just the underlying
non-symmetric operad of permutations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .permutations import Permutation, block_compose, compose

_ZERO = Fraction(0)


class PermCombination:
    """Finite rational combination of degree-n permutations."""

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, degree: int,
                 terms: Iterable[tuple[Permutation, Fraction]] = ()):
        acc: dict[Permutation, Fraction] = {}
        for p, c in terms:
            if p.degree != degree:
                raise ValueError(
                    f"degree {p.degree} permutation in a degree {degree} combination"
                )
            c = Fraction(c)
            if not c:
                continue
            new = acc.get(p, _ZERO) + c
            if new:
                acc[p] = new
            else:
                acc.pop(p, None)
        items = tuple(sorted(acc.items(), key=lambda pc: pc[0].word))
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", items)
        object.__setattr__(self, "_hash", hash((degree, items)))

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("PermCombination is immutable")

    @staticmethod
    def of(p: Permutation, coeff=1) -> "PermCombination":
        return PermCombination(p.degree, [(p, Fraction(coeff))])

    def coeff(self, p: Permutation) -> Fraction:
        for q, c in self.terms:
            if q == p:
                return c
        return _ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "PermCombination") -> "PermCombination":
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return PermCombination(self.degree, list(self.terms) + list(other.terms))

    def __sub__(self, other: "PermCombination") -> "PermCombination":
        return self + (-1) * other

    def __rmul__(self, scale) -> "PermCombination":
        scale = Fraction(scale)
        return PermCombination(self.degree, [(p, scale * c) for p, c in self.terms])

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermCombination)
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .termio import print_perm_combination
        return f"PermCombination({print_perm_combination(self)})"


def ass_compose(host: PermCombination,
                args: Sequence[PermCombination]) -> PermCombination:
    """Bilinear extension of block composition."""
    if len(args) != host.degree:
        raise ValueError(f"host degree {host.degree} but {len(args)} arguments")
    out_degree = sum(a.degree for a in args)
    pieces: list[tuple[Permutation, Fraction]] = []
    for p, c in host.terms:
        stack = [(c, [])]
        for a in args:
            stack = [(coeff * ac, chosen + [q])
                     for coeff, chosen in stack for q, ac in a.terms]
        for coeff, chosen in stack:
            pieces.append((block_compose(p, chosen), coeff))
    return PermCombination(out_degree, pieces)


def ass_act(x: PermCombination, s: Permutation) -> PermCombination:
    """Right regular action: each basis permutation gets multiplied by s."""
    if s.degree != x.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {s.degree}")
    return PermCombination(x.degree, [(compose(p, s), c) for p, c in x.terms])
