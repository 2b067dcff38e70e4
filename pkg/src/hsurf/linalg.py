"""Exact linear algebra over Q: matrix rank and an incremental echelon basis."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by fraction-exact Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if f:
                factor = f / p
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


class EchelonBasis:
    """Row-echelon span of sparse vectors ``{key: Fraction}``.

    ``order`` ranks keys; the pivot of a row is its lowest-ranked key.
    """

    def __init__(self, order: Mapping[Hashable, int]):
        self.order = order
        self.pivots: dict = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            lead = min(v, key=self.order.__getitem__)
            row = self.pivots.get(lead)
            if row is None:
                return v
            factor = v[lead]
            for k, c in row.items():
                nc = v.get(k, 0) - factor * c
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        lead = min(v, key=self.order.__getitem__)
        inv = 1 / v[lead]
        self.pivots[lead] = {k: c * inv for k, c in v.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def extend(self, vecs: Iterable[Mapping]) -> None:
        for v in vecs:
            self.add(v)
