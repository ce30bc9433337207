"""Multilinear maps on Q^dim: the endomorphism operad.

A ``MultilinearMap`` of arity n on a dim-dimensional space stores the
dense tensor of structure constants: ``f(e_j1, ..., e_jn) = sum_i
coeffs[i; j1..jn] e_i`` with exact rational entries. Arity-0 maps are
plain vectors (the image of the scalar 1).

Composition plugs maps into consecutive input blocks; it is computed by
folding single-slot insertions, which keeps the contraction loops small.
The symmetric group acts on the right by permuting inputs:
``(f . s)(v_1, ..., v_n) = f(v_{s^-1(1)}, ..., v_{s^-1(n)})``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .permutations import Permutation, inverse

_ZERO = Fraction(0)
_ONE = Fraction(1)


class MultilinearMap:
    """Exact dense tensor Q^dim tensor-power arity -> Q^dim."""

    __slots__ = ("dim", "arity", "coeffs")

    def __init__(self, dim: int, arity: int, coeffs: Iterable[Fraction]):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        if arity < 0:
            raise ValueError("arity must be >= 0")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != dim ** (arity + 1):
            raise ValueError(
                f"expected {dim ** (arity + 1)} coefficients for dim {dim} "
                f"arity {arity}, got {len(coeffs)}"
            )
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # pragma: no cover - immutability guard
        raise AttributeError("MultilinearMap is immutable")

    # coefficient (i; j1..jn), all 1-based
    def entry(self, i: int, js: Sequence[int]) -> Fraction:
        idx = i - 1
        for j in js:
            idx = idx * self.dim + (j - 1)
        return self.coeffs[idx]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultilinearMap) and self.dim == other.dim
                and self.arity == other.arity and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.dim, self.arity, self.coeffs))

    def __repr__(self) -> str:
        nz = sum(1 for c in self.coeffs if c)
        return f"MultilinearMap(dim={self.dim}, arity={self.arity}, nonzeros={nz})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "MultilinearMap") -> "MultilinearMap":
        if (self.dim, self.arity) != (other.dim, other.arity):
            raise ValueError("shape mismatch in sum of multilinear maps")
        return MultilinearMap(
            self.dim, self.arity,
            [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __rmul__(self, scale) -> "MultilinearMap":
        scale = Fraction(scale)
        return MultilinearMap(self.dim, self.arity, [scale * c for c in self.coeffs])

    def __sub__(self, other: "MultilinearMap") -> "MultilinearMap":
        return self + (-1) * other


def from_entries(dim: int, arity: int,
                 entries: Mapping[tuple, Fraction]) -> MultilinearMap:
    """Build a map from sparse 1-based entries ``(i, j1, ..., jn) -> c``."""
    size = dim ** (arity + 1)
    coeffs = [_ZERO] * size
    for key, c in entries.items():
        i, *js = key
        if len(js) != arity:
            raise ValueError(f"entry {key} has {len(js)} input indices, want {arity}")
        idx = i - 1
        for j in js:
            if not 1 <= j <= dim:
                raise ValueError(f"index {j} out of range 1..{dim}")
            idx = idx * dim + (j - 1)
        coeffs[idx] = Fraction(c)
    return MultilinearMap(dim, arity, coeffs)


def identity_map(dim: int) -> MultilinearMap:
    coeffs = [_ZERO] * (dim * dim)
    for i in range(dim):
        coeffs[i * dim + i] = _ONE
    return MultilinearMap(dim, 1, coeffs)


def zero_map(dim: int, arity: int) -> MultilinearMap:
    return MultilinearMap(dim, arity, [_ZERO] * dim ** (arity + 1))


def constant_map(vector: Sequence[Fraction]) -> MultilinearMap:
    """An arity-0 map: the vector picked out by the scalar 1."""
    return MultilinearMap(len(tuple(vector)), 0, vector)


def circ_endo(f: MultilinearMap, i: int, g: MultilinearMap) -> MultilinearMap:
    """Insert ``g`` at input ``i`` of ``f`` (single-slot composition)."""
    if f.dim != g.dim:
        raise ValueError(f"dim mismatch: {f.dim} vs {g.dim}")
    m, n, d = f.arity, g.arity, f.dim
    if not 1 <= i <= m:
        raise ValueError(f"slot {i} out of range for arity {m}")
    out_arity = m + n - 1
    fc, gc = f.coeffs, g.coeffs
    size = d ** (out_arity + 1)
    coeffs = [_ZERO] * size
    pre = i - 1          # f inputs before the inserted block
    post = m - i         # f inputs after it
    for r in range(d):
        for jpre in itertools.product(range(d), repeat=pre):
            for jg in itertools.product(range(d), repeat=n):
                # g applied to its block, contracted against f's slot i
                gcol = [gc[_flat(t, jg, d)] for t in range(d)]
                if not any(gcol):
                    continue
                for jpost in itertools.product(range(d), repeat=post):
                    s = _ZERO
                    for t in range(d):
                        gv = gcol[t]
                        if gv:
                            s += fc[_flat(r, jpre + (t,) + jpost, d)] * gv
                    if s:
                        coeffs[_flat(r, jpre + jg + jpost, d)] = s
    return MultilinearMap(d, out_arity, coeffs)


def _flat(i: int, js: tuple, d: int) -> int:
    idx = i
    for j in js:
        idx = idx * d + j
    return idx


def compose_endo(f: MultilinearMap,
                 args: Sequence[MultilinearMap]) -> MultilinearMap:
    """Total composition with consecutive input blocks."""
    if len(args) != f.arity:
        raise ValueError(f"arity {f.arity} but {len(args)} arguments")
    for g in args:
        if g.dim != f.dim:
            raise ValueError(f"dim mismatch: {f.dim} vs {g.dim}")
    out = f
    # right-to-left keeps the remaining slot numbers stable
    for i in range(f.arity, 0, -1):
        out = circ_endo(out, i, args[i - 1])
    return out


def act_endo(f: MultilinearMap, s: Permutation) -> MultilinearMap:
    """Right action: route input k to underlying input s(k)."""
    if s.degree != f.arity:
        raise ValueError(f"degree {s.degree} acting on arity {f.arity}")
    d, n = f.dim, f.arity
    sinv = inverse(s)
    coeffs = [_ZERO] * len(f.coeffs)
    for i in range(d):
        for js in itertools.product(range(d), repeat=n):
            routed = tuple(js[sinv(k) - 1] for k in range(1, n + 1))
            coeffs[_flat(i, js, d)] = f.coeffs[_flat(i, routed, d)]
    return MultilinearMap(d, n, coeffs)


def evaluate(f: MultilinearMap,
             inputs: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    """Apply ``f`` to coordinate vectors; exact contraction."""
    if len(inputs) != f.arity:
        raise ValueError(f"arity {f.arity} but {len(inputs)} inputs")
    vecs = [tuple(Fraction(x) for x in v) for v in inputs]
    for v in vecs:
        if len(v) != f.dim:
            raise ValueError(f"input of length {len(v)} for dim {f.dim}")
    d = f.dim
    out = [_ZERO] * d
    for js in itertools.product(range(d), repeat=f.arity):
        w = _ONE
        for k, j in enumerate(js):
            w *= vecs[k][j]
            if not w:
                break
        if not w:
            continue
        for i in range(d):
            c = f.coeffs[_flat(i, js, d)]
            if c:
                out[i] += c * w
    return tuple(out)
