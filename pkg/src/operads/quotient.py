"""Presentations and quotients of free operads.

A presentation is a signature plus relation combinations; the operad it
defines is the free operad modulo the ideal the relations generate. The
ideal component in each arity is handled as an explicit spanning set of
coordinate rows over the term basis, so dimension counts and equality
tests reduce to exact rank and membership computations.

The spanning set for arity n collects every element

    u o_i (r o (s_1, ..., s_m))

with u a basis term, i one of its slots, r a relation and the s_j basis
terms filling r's inputs so that the total arity is n, and then closes
the lot under the S_n action (symmetric mode). Each row lies in the ideal
by construction; completeness at the arities we care about is checked
against independent evaluation oracles in the test suite. No rewriting
or normal forms: equality modulo the ideal is always a membership test.

Arity is capped (default 6) because the basis grows like n! times a
Catalan number.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactla import Eliminator, RowMatrix
from .free_operad import (LinComb, Signature, Term, enumerate_basis, lin_act,
                          lin_circ, lin_gamma, basis_index, weight)
from .permutations import Permutation

DEFAULT_ARITY_CAP = 6


@dataclass(frozen=True)
class Presentation:
    """Generators plus relations; defines a quotient operad."""

    name: str
    signature: Signature
    relations: tuple[LinComb, ...]
    relation_names: tuple[str, ...]

    def __post_init__(self):
        if len(self.relation_names) != len(self.relations):
            raise ValueError("one name per relation required")
        for rname, rel in zip(self.relation_names, self.relations):
            if rel.arity < 2:
                raise ValueError(f"relation {rname} has arity {rel.arity} < 2")
            for t, _ in rel.terms:
                arities = t.shape.vertex_arities()
                for gname, k in zip(t.decoration, arities):
                    try:
                        expected = self.signature.arity_of(gname)
                    except KeyError:
                        raise ValueError(
                            f"relation {rname} uses unknown generator {gname!r}"
                        ) from None
                    if expected != k:
                        raise ValueError(
                            f"relation {rname}: generator {gname} used with "
                            f"arity {k}, declared {expected}"
                        )

    @property
    def mode(self) -> str:
        return self.signature.mode


def make_presentation(name: str, signature: Signature,
                      relations: Sequence[LinComb],
                      relation_names: Sequence[str] | None = None) -> Presentation:
    relations = tuple(relations)
    if relation_names is None:
        relation_names = tuple(f"r{i + 1}" for i in range(len(relations)))
    return Presentation(name, signature, relations, tuple(relation_names))


@dataclass(frozen=True)
class IdealBasis:
    """Spanning rows of the ideal component in one arity."""

    arity: int
    spanning: RowMatrix


def _check_supported(p: Presentation, n: int, max_arity: int) -> None:
    if not p.signature.finite_basis():
        raise ValueError(
            f"presentation {p.name!r} has generators of arity < 2; "
            "ideal and quotient computations are unsupported"
        )
    if n < 1:
        raise ValueError("arity must be >= 1")
    if n > max_arity:
        raise ValueError(
            f"arity {n} exceeds the cap {max_arity}; raise max_arity explicitly "
            "if you really want this"
        )


@lru_cache(maxsize=None)
def spanning_lincombs(p: Presentation, n: int) -> tuple[LinComb, ...]:
    """Deduplicated spanning elements of the arity-n ideal component."""
    rows: dict[tuple, LinComb] = {}

    def keep(x: LinComb) -> None:
        if x.is_zero():
            return
        lead = x.terms[0][1]
        key = tuple((t.key, c / lead) for t, c in x.terms)
        rows.setdefault(key, x)

    for rel in p.relations:
        m = rel.arity
        for a in range(1, n - m + 2):
            t_total = n + 1 - a
            if t_total < m:
                continue
            inners = [
                lin_gamma(rel, [LinComb.of(s) for s in fillers])
                for fillers in _filler_tuples(p.signature, m, t_total)
            ]
            for u in enumerate_basis(p.signature, a):
                host = LinComb.of(u)
                for i in range(1, a + 1):
                    for inner in inners:
                        keep(lin_circ(host, i, inner))

    if p.mode == "symmetric":
        base = list(rows.values())
        for x in base:
            for word in itertools.permutations(range(1, n + 1)):
                keep(lin_act(x, Permutation(word)))
    return tuple(rows.values())


def _filler_tuples(sig: Signature, m: int, total: int):
    """All m-tuples of basis terms with arities summing to ``total``."""
    for parts in _compositions(total, m):
        for combo in itertools.product(
                *(enumerate_basis(sig, part) for part in parts)):
            yield combo


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


def coordinates(x: LinComb, sig: Signature) -> dict[int, Fraction]:
    """Sparse coordinates of ``x`` in the arity basis."""
    index = basis_index(sig, x.arity)
    return {index[t]: c for t, c in x.terms}


@lru_cache(maxsize=None)
def _ideal_eliminator(p: Presentation, n: int) -> Eliminator:
    e = Eliminator()
    for x in spanning_lincombs(p, n):
        e.add(coordinates(x, p.signature))
    return e


def ideal_spanning_set(p: Presentation, n: int, *,
                       max_arity: int = DEFAULT_ARITY_CAP) -> IdealBasis:
    """Spanning rows of (R)(n) in the coordinates of the term basis."""
    _check_supported(p, n, max_arity)
    width = len(enumerate_basis(p.signature, n))
    sparse = [coordinates(x, p.signature) for x in spanning_lincombs(p, n)]
    return IdealBasis(arity=n, spanning=RowMatrix.from_sparse(sparse, width))


def ideal_rank(p: Presentation, n: int, *,
               max_arity: int = DEFAULT_ARITY_CAP) -> int:
    _check_supported(p, n, max_arity)
    return _ideal_eliminator(p, n).rank


def free_dim(p: Presentation, n: int, *,
             max_arity: int = DEFAULT_ARITY_CAP) -> int:
    _check_supported(p, n, max_arity)
    return len(enumerate_basis(p.signature, n))


def quotient_dim(p: Presentation, n: int, *,
                 max_arity: int = DEFAULT_ARITY_CAP) -> int:
    """dim of the arity-n component of the quotient operad."""
    _check_supported(p, n, max_arity)
    return free_dim(p, n, max_arity=max_arity) - _ideal_eliminator(p, n).rank


def equal_mod_ideal(p: Presentation, v: LinComb, w: LinComb, *,
                    max_arity: int = DEFAULT_ARITY_CAP) -> bool:
    """True iff v and w define the same class in the quotient."""
    if v.arity != w.arity:
        raise ValueError(f"arity mismatch: {v.arity} vs {w.arity}")
    _check_supported(p, v.arity, max_arity)
    diff = v - w
    if diff.is_zero():
        return True
    return _ideal_eliminator(p, v.arity).contains(coordinates(diff, p.signature))


def is_quadratic(p: Presentation) -> bool:
    """True iff every relation term has weight exactly 2."""
    return all(weight(t) == 2
               for rel in p.relations for t, _ in rel.terms)
