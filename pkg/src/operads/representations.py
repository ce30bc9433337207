"""Algebras over presented operads.

A representation assigns a multilinear map to every generator; it extends
uniquely to all terms (trivial term to the identity, composition to
composition, the symmetric action to input routing, linearly to
combinations). ``check_relations`` verifies that every relation is sent
to the zero map, which is exactly the condition for the assignment to
factor through the quotient operad.

A handful of concrete test algebras ship with the package: the
three-dimensional vector cross product, 2x2 matrix multiplication, a
two-dimensional signed-difference product that is deliberately not
associative, and the zero product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .endomorphism import (MultilinearMap, act_endo, compose_endo,
                           from_entries, identity_map, zero_map)
from .free_operad import LinComb, Term, nested, LEAF
from .permutations import Permutation
from .quotient import Presentation


@dataclass(frozen=True)
class Representation:
    """A presentation together with generator images on Q^dim."""

    presentation: Presentation
    dim: int
    images: tuple[tuple[str, MultilinearMap], ...]

    def __post_init__(self):
        have = dict(self.images)
        for name, arity in self.presentation.signature.generators:
            img = have.get(name)
            if img is None:
                raise ValueError(f"no image for generator {name!r}")
            if img.dim != self.dim or img.arity != arity:
                raise ValueError(
                    f"image of {name!r} has shape (dim={img.dim}, arity={img.arity}),"
                    f" expected (dim={self.dim}, arity={arity})"
                )
        extra = set(have) - set(self.presentation.signature.names())
        if extra:
            raise ValueError(f"images for unknown generators: {sorted(extra)}")

    def image_of(self, name: str) -> MultilinearMap:
        return dict(self.images)[name]


def make_representation(p: Presentation, dim: int,
                        images: Mapping[str, MultilinearMap]) -> Representation:
    return Representation(p, dim, tuple(sorted(images.items())))


@dataclass(frozen=True)
class AlgebraSpec:
    """A named concrete algebra: a space dimension and a binary product."""

    name: str
    dim: int
    product: MultilinearMap


def derived_map(r: Representation,
                x: Union[Term, LinComb]) -> MultilinearMap:
    """Extend the generator assignment to a term or combination."""
    if isinstance(x, LinComb):
        out = zero_map(r.dim, x.arity)
        for t, c in x.terms:
            out = out + c * derived_map(r, t)
        return out
    images = dict(r.images)
    body = _eval_nested(nested(x), images, r.dim)
    word = x.labels
    if all(v == i + 1 for i, v in enumerate(word)):
        return body
    return act_endo(body, Permutation(word))


def _eval_nested(node, images, dim) -> MultilinearMap:
    if node is LEAF:
        return identity_map(dim)
    name, kids = node
    f = images[name]
    if not kids:
        return f
    return compose_endo(f, [_eval_nested(k, images, dim) for k in kids])


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness_relation: str | None = None
    witness_index: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_relations(r: Representation) -> Verdict:
    """Verify that every relation maps to the zero multilinear map.

    The first failure is reported with the relation name and the 1-based
    coefficient index (output index first) where a nonzero entry appears.
    """
    for name, rel in zip(r.presentation.relation_names, r.presentation.relations):
        img = derived_map(r, rel)
        if img.is_zero():
            continue
        d, n = img.dim, img.arity
        for pos, c in enumerate(img.coeffs):
            if c:
                idx = []
                rem = pos
                for _ in range(n + 1):
                    idx.append(rem % d)
                    rem //= d
                witness = tuple(j + 1 for j in reversed(idx))
                return Verdict(False, name, witness)
    return Verdict(True)


def rep_from_binary(p: Presentation, m: MultilinearMap) -> Representation:
    """Assign the unique binary generator of ``p`` to ``m``.

    Works for presentations whose signature is a single binary generator;
    no axiom checking happens here (see ``check_relations``).
    """
    gens = p.signature.generators
    if len(gens) != 1 or gens[0][1] != 2:
        raise ValueError(
            f"presentation {p.name!r} does not consist of one binary generator"
        )
    if m.arity != 2:
        raise ValueError(f"binary image required, got arity {m.arity}")
    return make_representation(p, m.dim, {gens[0][0]: m})


def binary_from_rep(r: Representation) -> MultilinearMap:
    """Extract the image of the unique binary generator."""
    gens = r.presentation.signature.generators
    if len(gens) != 1 or gens[0][1] != 2:
        raise ValueError(
            f"presentation {r.presentation.name!r} does not consist of one "
            "binary generator"
        )
    return r.image_of(gens[0][0])


def is_algebra_morphism(f: Sequence[Sequence[Fraction]],
                        rv: Representation,
                        rw: Representation) -> Verdict:
    """Check that a linear map intertwines two algebras.

    ``f`` is a matrix with dim(rw) rows and dim(rv) columns. Checking the
    commuting square on the generators suffices: every operation is a
    composite of generator corollas followed by an input rerouting, and
    both sides of the square respect those constructions.
    """
    if rv.presentation != rw.presentation:
        raise ValueError("the two representations must share a presentation")
    rows = [tuple(Fraction(x) for x in row) for row in f]
    if len(rows) != rw.dim or any(len(row) != rv.dim for row in rows):
        raise ValueError(
            f"matrix must be {rw.dim} x {rv.dim} for these representations"
        )
    for name, arity in rv.presentation.signature.generators:
        gv, gw = rv.image_of(name), rw.image_of(name)
        if not _square_commutes(rows, gv, gw, arity, rv.dim, rw.dim):
            return Verdict(False, witness_relation=name)
    return Verdict(True)


def _square_commutes(f, gv, gw, arity, dv, dw) -> bool:
    # compare f . gv and gw . f^{tensor arity} entrywise on basis inputs
    for js in itertools.product(range(1, dv + 1), repeat=arity):
        lhs_vec = [Fraction(0)] * dw
        for t in range(1, dv + 1):
            c = gv.entry(t, js)
            if c:
                for i in range(dw):
                    lhs_vec[i] += f[i][t - 1] * c
        rhs_vec = [Fraction(0)] * dw
        for ts in itertools.product(range(1, dw + 1), repeat=arity):
            w = Fraction(1)
            for k, t in enumerate(ts):
                w *= f[t - 1][js[k] - 1]
                if not w:
                    break
            if not w:
                continue
            for i in range(1, dw + 1):
                c = gw.entry(i, ts)
                if c:
                    rhs_vec[i - 1] += c * w
        if lhs_vec != rhs_vec:
            return False
    return True


# -- built-in test algebras ----------------------------------------------

def _cross3() -> AlgebraSpec:
    eps = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
           (3, 2, 1): -1, (1, 3, 2): -1, (2, 1, 3): -1}
    entries = {(i, j, k): Fraction(s) for (j, k, i), s in eps.items()}
    return AlgebraSpec("cross3", 3, from_entries(3, 2, entries))


def _mat2() -> AlgebraSpec:
    # basis e_{2(a-1)+b} is the matrix unit E_ab; E_ab E_cd = [b=c] E_ad
    entries = {}
    for a in range(1, 3):
        for b in range(1, 3):
            for c in range(1, 3):
                for d in range(1, 3):
                    if b == c:
                        i = 2 * (a - 1) + d
                        j = 2 * (a - 1) + b
                        k = 2 * (c - 1) + d
                        entries[(i, j, k)] = Fraction(1)
    return AlgebraSpec("mat2", 4, from_entries(4, 2, entries))


def _sub() -> AlgebraSpec:
    # signed-difference product on the plane: (x, y) -> (x1 y2 - x2 y1) e1;
    # bilinear, visibly non-associative
    entries = {(1, 1, 2): Fraction(1), (1, 2, 1): Fraction(-1)}
    return AlgebraSpec("sub", 2, from_entries(2, 2, entries))


def _zero() -> AlgebraSpec:
    return AlgebraSpec("zero", 2, zero_map(2, 2))


BUILTIN_ALGEBRAS: dict[str, AlgebraSpec] = {
    a.name: a for a in (_cross3(), _mat2(), _sub(), _zero())
}


def builtin_algebra(name: str) -> AlgebraSpec:
    try:
        return BUILTIN_ALGEBRAS[name]
    except KeyError:
        raise KeyError(
            f"unknown algebra {name!r}; available: {sorted(BUILTIN_ALGEBRAS)}"
        ) from None
