"""Independent oracles used by the test suite.

Nothing in this file goes through the package's elimination kernel or
ideal machinery: ranks come from a dense textbook Gaussian elimination
with a different pivoting order, and quotient dimensions come from
evaluating basis terms into concrete algebras (words of a free monoid,
commutative monomials, multilinear bracket expansions inside the free
associative algebra) and ranking the images.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from operads.free_operad import LEAF, Term, nested


def dense_rank(rows: list[list[Fraction]]) -> int:
    """Row echelon rank, scanning pivot columns right to left."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols - 1, -1, -1):
        pivot_row = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def rank_of_vectors(vectors: list[dict]) -> int:
    """Dense rank of sparse {key: coeff} vectors over a common key set."""
    keys = sorted({k for v in vectors for k in v})
    pos = {k: i for i, k in enumerate(keys)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(keys)
        for k, c in v.items():
            row[pos[k]] = Fraction(c)
        rows.append(row)
    return dense_rank(rows)


# -- evaluations of basis terms into concrete algebras -------------------

def planar_leaf_word(t: Term) -> tuple[int, ...]:
    """The label word read along the planar leaf positions."""
    return t.labels


def monoid_word(t: Term) -> dict:
    """Evaluate every vertex as plain concatenation: the ordered word."""
    return {t.labels: Fraction(1)}


def commutative_monomial(t: Term) -> dict:
    return {tuple(sorted(t.labels)): Fraction(1)}


def bracket_expansion(t: Term) -> dict:
    """Expand each vertex as xy - yx inside the free associative algebra.

    Returns the multilinear component as {word: coefficient}. Only binary
    vertices are meaningful here (the bracket presets use nothing else).
    """
    labels = iter(t.labels)

    def walk(node) -> dict:
        if node is LEAF:
            return {(next(labels),): Fraction(1)}
        _, kids = node
        assert len(kids) == 2, "bracket evaluation expects binary vertices"
        a = walk(kids[0])
        b = walk(kids[1])
        out: dict = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                out[wa + wb] = out.get(wa + wb, Fraction(0)) + ca * cb
                out[wb + wa] = out.get(wb + wa, Fraction(0)) - ca * cb
        return {w: c for w, c in out.items() if c}

    return walk(nested(t))


def quotient_dim_oracle(basis: list[Term], evaluation) -> int:
    """Rank of the evaluated basis: the dimension the quotient must have."""
    return rank_of_vectors([evaluation(t) for t in basis])


def brute_force_terms(gens: list[tuple[str, int]], n: int, symmetric: bool):
    """Independent enumeration of decorated shapes and label words.

    Returns a set of (preorder decoration, arity sequence, word) triples;
    kept deliberately separate from the package's enumeration.
    """

    def shapes(m: int):
        if m == 1:
            yield ("leaf",)
        for g, k in gens:
            if k < 2 or k > m:
                continue
            for parts in _compositions(m, k):
                for kids in itertools.product(*(list(shapes(p)) for p in parts)):
                    flat = (g,)
                    for kid in kids:
                        flat = flat + kid
                    yield flat
        return

    words = (itertools.permutations(range(1, n + 1)) if symmetric
             else [tuple(range(1, n + 1))])
    all_words = list(words)
    return {(s, w) for s in shapes(n) for w in all_words}


def _compositions(n: int, k: int):
    if k == 1:
        yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest
