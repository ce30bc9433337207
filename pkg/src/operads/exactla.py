"""Exact linear algebra over the rationals.

Rank and span-membership for sets of coordinate rows, computed entirely
with ``fractions.Fraction``. No floating point enters anywhere, so ranks
are exact. Rows are kept sparse internally ({column: coefficient}); the
public interface is dense sequences.

Everything here is immutable after construction (``Eliminator`` mutates
only itself while rows are fed in), so values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction


def sparse_row(row: Sequence[Rational]) -> dict[int, Fraction]:
    """Dense row -> {column: coefficient} with zero entries dropped."""
    return {j: Fraction(x) for j, x in enumerate(row) if x}


class RowMatrix:
    """A sequence of equal-length rational rows.

    The ambient dimension (row width) is fixed at construction; an
    explicit ``width`` is required when there are no rows.
    """

    def __init__(self, rows: Iterable[Sequence[Rational]], width: int | None = None):
        dense = [tuple(Fraction(x) for x in r) for r in rows]
        if width is None:
            if not dense:
                raise ValueError("width is required for a matrix with no rows")
            width = len(dense[0])
        for r in dense:
            if len(r) != width:
                raise ValueError(
                    f"row of length {len(r)} in a matrix of ambient width {width}"
                )
        self.width = width
        self._sparse = tuple(sparse_row(r) for r in dense)

    @classmethod
    def from_sparse(cls, rows: Iterable[Mapping[int, Fraction]],
                    width: int) -> "RowMatrix":
        m = cls([], width=width)
        m._sparse = tuple({j: Fraction(x) for j, x in r.items() if x} for r in rows)
        for r in m._sparse:
            for j in r:
                if not 0 <= j < width:
                    raise ValueError(f"column {j} outside ambient width {width}")
        return m

    def __len__(self) -> int:
        return len(self._sparse)

    def rows(self) -> list[tuple[Fraction, ...]]:
        """Dense copies of the rows."""
        out = []
        for s in self._sparse:
            out.append(tuple(s.get(j, Fraction(0)) for j in range(self.width)))
        return out

    def sparse_rows(self) -> tuple[Mapping[int, Fraction], ...]:
        return self._sparse


class Eliminator:
    """Incremental reduced row echelon form.

    Pivot rows are normalized (pivot coefficient 1) and fully reduced
    against each other, so every stored row touches its own pivot column
    plus non-pivot columns only. That invariant keeps rows short when the
    span has small codimension and makes ``reduce`` a single pass.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, dict[int, Fraction]] = {}
        # column -> set of pivot columns whose row has a nonzero entry there
        self._occurs: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Return ``row`` reduced modulo the current span (fresh dict)."""
        out = {j: x for j, x in row.items() if x}
        for c in [c for c in out if c in self.pivots]:
            coef = out.get(c)
            if not coef:
                continue
            for cc, vv in self.pivots[c].items():
                new = out.get(cc, _ZERO) - coef * vv
                if new:
                    out[cc] = new
                else:
                    out.pop(cc, None)
        return out

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Absorb a row; return True when it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        inv = Fraction(1) / r[p]
        r = {c: v * inv for c, v in r.items()}
        # knock the new pivot column out of the older rows
        for q in list(self._occurs.get(p, ())):
            old = self.pivots[q]
            coef = old.get(p)
            if not coef:
                continue
            for cc, vv in r.items():
                new = old.get(cc, _ZERO) - coef * vv
                if new:
                    old[cc] = new
                    if cc != q:
                        self._occurs.setdefault(cc, set()).add(q)
                else:
                    old.pop(cc, None)
                    if cc != q:
                        occ = self._occurs.get(cc)
                        if occ:
                            occ.discard(q)
        self.pivots[p] = r
        for cc in r:
            if cc != p:
                self._occurs.setdefault(cc, set()).add(p)
        self._occurs.pop(p, None)
        return True

    def contains(self, row: Mapping[int, Fraction]) -> bool:
        return not self.reduce(row)


_ZERO = Fraction(0)


def rank(m: RowMatrix) -> int:
    """Dimension of the row span. Exact."""
    e = Eliminator()
    for r in m.sparse_rows():
        e.add(r)
    return e.rank


def in_span(v: Sequence[Rational], m: RowMatrix) -> bool:
    """True iff ``v`` lies in the row span of ``m``.

    Equivalent to ``rank(m) == rank(m with v appended)`` but computed by
    reducing ``v`` once against the echelon form of ``m``.
    """
    if len(v) != m.width:
        raise ValueError(
            f"vector of length {len(v)} against ambient width {m.width}"
        )
    e = Eliminator()
    for r in m.sparse_rows():
        e.add(r)
    return e.contains(sparse_row(v))
