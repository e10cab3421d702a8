"""Exact sparse Gaussian elimination over Q.

Rows and columns are dicts {index: Fraction}.  Matrices are small per weight
block, so plain Fraction elimination with sparse rows is fast enough and
keeps every intermediate exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from .core import IntegrityError

Row = Dict[Hashable, Fraction]


class Echelon:
    """Incremental reduced row space of a set of sparse vectors.

    Each stored pivot row also remembers how it was formed from the inputs,
    so membership queries can return the combination (the "witness").
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[Hashable, Row] = {}     # pivot -> row (pivot coeff 1)
        self.combo: Dict[Hashable, Row] = {}    # pivot -> combination of inputs
        self.order: List[Hashable] = []
        self.track = track
        self._n = 0

    def reduce(self, v: Row, combo: Optional[Row] = None):
        v = dict(v)
        combo = dict(combo) if combo is not None else None
        changed = True
        while changed:
            changed = False
            for p in [p for p in v if p in self.rows]:
                c = v.get(p)
                if not c:
                    continue
                for k, a in self.rows[p].items():
                    nv = v.get(k, 0) - c * a
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
                if combo is not None:
                    for k, a in self.combo[p].items():
                        nv = combo.get(k, 0) - c * a
                        if nv:
                            combo[k] = nv
                        else:
                            combo.pop(k, None)
                changed = True
        return v, combo

    def add(self, v: Row) -> bool:
        """Insert a vector; return True if it enlarged the span."""
        idx = self._n
        self._n += 1
        combo = {idx: Fraction(1)} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            return False
        p = min(r, key=_pivot_key)
        c = r[p]
        r = {k: a / c for k, a in r.items()}
        if combo is not None:
            combo = {k: a / c for k, a in combo.items()}
        # keep rows fully reduced w.r.t. the new pivot
        for q, row in self.rows.items():
            a = row.get(p)
            if a:
                for k, b in r.items():
                    nv = row.get(k, 0) - a * b
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                if combo is not None:
                    cq = self.combo[q]
                    for k, b in combo.items():
                        nv = cq.get(k, 0) - a * b
                        if nv:
                            cq[k] = nv
                        else:
                            cq.pop(k, None)
        self.rows[p] = r
        if combo is not None:
            self.combo[p] = combo
        self.order.append(p)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v: Row) -> bool:
        r, _ = self.reduce(v)
        return not r

    def express(self, v: Row) -> Optional[Row]:
        """Coefficients c_i with sum c_i * input_i == v, or None."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        r, combo = self.reduce(v, {})
        if r:
            return None
        return {k: -a for k, a in combo.items()}


def _pivot_key(k):
    from .core import sort_key
    return sort_key(k)


def rank(vectors: Sequence[Row]) -> int:
    E = Echelon()
    for v in vectors:
        E.add(v)
    return E.rank


def solve(columns: Sequence[Row], target: Row) -> Optional[List[Fraction]]:
    """Find x with sum_j x_j * columns[j] == target (exact), or None."""
    E = Echelon(track=True)
    for c in columns:
        E.add(c)
    combo = E.express(target)
    if combo is None:
        return None
    x = [Fraction(0)] * len(columns)
    for k, a in combo.items():
        x[k] = a
    return x


def kernel(columns: Sequence[Row]) -> List[List[Fraction]]:
    """Basis of {x : sum_j x_j columns[j] = 0}."""
    E = Echelon(track=True)
    out = []
    for j, c in enumerate(columns):
        r, combo = E.reduce(c, {j: Fraction(1)})
        if not r:
            x = [Fraction(0)] * len(columns)
            for k, a in combo.items():
                x[k] = a
            out.append(x)
            E._n += 1
        else:
            E.add(c)
    return out


def inverse(M: List[List[Fraction]]) -> List[List[Fraction]]:
    """Dense exact inverse; raises IntegrityError when singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise IntegrityError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return [row[n:] for row in A]
