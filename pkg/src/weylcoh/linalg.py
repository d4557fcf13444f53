"""Exact Gauss-Jordan elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Sequence


class Echelon(NamedTuple):
    rows: List[List[Fraction]]
    pivots: List[int]

    @property
    def rank(self) -> int:
        return len(self.rows)


def row_reduce(rows: Sequence[Sequence]) -> Echelon:
    """Reduced row-echelon form of ``rows`` with exact arithmetic.

    Pivot columns are scanned left to right and the first remaining row
    with a nonzero entry in the column is used.  Zero rows are dropped, so
    ``len(result.rows) == rank``.  Pivot entries are normalized to 1.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return Echelon([], [])
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("rows must all have the same length")
    pivots = []
    r = 0
    for c in range(width):
        for i in range(r, len(m)):
            if m[i][c]:
                break
        else:
            continue
        m[r], m[i] = m[i], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return Echelon(m[:r], pivots)


def rank(rows: Sequence[Sequence]) -> int:
    return row_reduce(rows).rank


def nullspace(rows: Sequence[Sequence], width: int) -> List[List[Fraction]]:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    ech = row_reduce(rows) if rows else Echelon([], [])
    free = [c for c in range(width) if c not in ech.pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for row, p in zip(ech.rows, ech.pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis
