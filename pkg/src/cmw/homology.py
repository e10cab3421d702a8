"""Windowed cochain complexes: exact cohomology, coboundary witnesses and the
first pages of the spectral sequence of a bicomplex.

A complex is described by three callables:

* ``basis(deg)``  -- the finite list of basis keys of the given degree,
* ``d(v)``        -- the differential on a FormalSum,
* ``keep(key)``   -- membership in the window (terms outside are dropped).

All operators in this package only move weight in one direction, so the
window is a quotient complex and everything computed here is exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Tuple

from .core import FormalSum, IntegrityError, MalformedInput
from .linalg import Echelon, kernel, solve
from . import jets
from . import lie
from . import hopf


class WindowedComplex:
    def __init__(self, basis: Callable[[int], List], d: Callable[[FormalSum], FormalSum],
                 keep: Callable = None, name: str = ""):
        self._basis = basis
        self._d = d
        self._keep = keep or (lambda k: True)
        self.name = name
        self._bcache: Dict[int, List] = {}
        self._mcache: Dict[int, List[dict]] = {}

    def basis(self, deg: int) -> List:
        if deg not in self._bcache:
            self._bcache[deg] = list(self._basis(deg)) if deg >= 0 else []
        return self._bcache[deg]

    def d(self, v: FormalSum) -> FormalSum:
        return self._d(v).filter(self._keep)

    def columns(self, deg: int) -> List[dict]:
        """Images of the degree-deg basis vectors."""
        if deg not in self._mcache:
            self._mcache[deg] = [dict(self.d(FormalSum.basis(k)).items()) for k in self.basis(deg)]
        return self._mcache[deg]

    def check_square(self, deg: int) -> None:
        """Raise IntegrityError if d o d != 0 on the degree-deg basis."""
        for k in self.basis(deg):
            dd = self.d(self.d(FormalSum.basis(k)))
            if dd:
                raise IntegrityError("d^2 != 0 on %r in %s" % (k, self.name))

    def rank(self, deg: int) -> int:
        E = Echelon()
        for c in self.columns(deg):
            E.add(c)
        return E.rank

    def cohomology(self, deg: int) -> Tuple[int, List[FormalSum]]:
        """(dimension, representatives) of H^deg in the window."""
        basis = self.basis(deg)
        ker = kernel(self.columns(deg))
        im = Echelon()
        for c in self.columns(deg - 1):
            im.add(c)
        reps = []
        for x in ker:
            v = {basis[i]: a for i, a in enumerate(x) if a}
            if im.add(v):
                reps.append(FormalSum(v))
        return len(reps), reps

    def is_cocycle(self, v: FormalSum) -> bool:
        return self.d(v) == 0

    def is_coboundary(self, v: FormalSum, deg: int) -> Tuple[bool, Optional[FormalSum]]:
        """Decide v in d(C^{deg-1}); the witness w satisfies d(w) == v."""
        v = v.filter(self._keep)
        basis = self.basis(deg - 1)
        sol = solve(self.columns(deg - 1), dict(v.items()))
        if sol is None:
            return False, None
        w = FormalSum({basis[i]: a for i, a in enumerate(sol) if a})
        if self.d(w) != v:
            raise IntegrityError("witness failed to reproduce the target")
        return True, w


class Bicomplex:
    """Bigraded complex with vertical d0 (raising p) and horizontal d1
    (raising q).  ``basis(p, q)`` lists keys; ``keep`` is the window.

    Page indexing: E_1^{q, p} -- the column is the horizontal degree q, the
    row the vertical degree p.
    """

    def __init__(self, basis: Callable[[int, int], List], dv, dh, keep=None, pmax: int = 2,
                 total=None, name: str = ""):
        self._basis = basis
        self.dv = lambda v: dv(v).filter(self._keep)
        self.dh = lambda v: dh(v).filter(self._keep)
        self._keep = keep or (lambda k: True)
        self.pmax = pmax
        self.name = name
        self._total = total
        self._cache: Dict[Tuple[int, int], List] = {}

    def basis(self, p: int, q: int) -> List:
        if p < 0 or q < 0 or p > self.pmax:
            return []
        if (p, q) not in self._cache:
            self._cache[(p, q)] = list(self._basis(p, q))
        return self._cache[(p, q)]

    def column_complex(self, q: int) -> WindowedComplex:
        return WindowedComplex(lambda p: self.basis(p, q), self.dv, self._keep,
                               name="%s column %d" % (self.name, q))

    def total_complex(self) -> WindowedComplex:
        if self._total is None:
            raise MalformedInput("no total differential given")

        def basis(n):
            out = []
            for p in range(0, min(n, self.pmax) + 1):
                out.extend(self.basis(p, n - p))
            return out
        return WindowedComplex(basis, self._total, self._keep, name="Tot " + self.name)

    def e1_dim(self, q: int, p: int) -> int:
        """dim E_1^{q, p}."""
        return self.column_complex(q).cohomology(p)[0]

    def e1_class(self, x: FormalSum, q: int, p: int) -> dict:
        """Report on a vertical cocycle x of bidegree (p, q):

        * ``closed``:   d0 x == 0
        * ``nonzero``:  x is not d0-exact (its E_1 class is nonzero)
        * ``d1_closed``: d1 x is d0-exact, with ``witness`` y, d0 y == d1 x
        """
        x = x.filter(self._keep)
        col = self.column_complex(q)
        closed = col.d(x) == 0
        exact, _ = col.is_coboundary(x, p)
        y = self.dh(x)
        nxt = self.column_complex(q + 1)
        d1c, wit = nxt.is_coboundary(y, p) if y else (True, FormalSum())
        return {"closed": closed, "nonzero": closed and not exact,
                "d1_closed": d1c, "witness": wit, "d1x": y}


# ---------------------------------------------------------------------------
# the Lie bicomplex Omega (x) ^p s* (x) ^q n*

def _forms_of_weight(W: int) -> List[tuple]:
    out = []
    if W >= 0:
        out.append(("x", W))
    if W >= 1:
        out.append(("f", W - 1))
    return out


def _n_words(q: int, D: int) -> List[tuple]:
    out = []
    for N in combinations(range(1, D + 1), q):
        if sum(N) <= D:
            out.append(N)
    return out


def lie_basis(p: int, q: int, D: int, weight: int = 0) -> List[tuple]:
    out = []
    for S in lie.S_WORDS:
        if len(S) != p:
            continue
        for N in _n_words(q, D):
            for form in _forms_of_weight(weight + sum(S) + sum(N)):
                out.append((form, S, N))
    return out


def lie_bicomplex(D: int, weight: int = 0) -> Bicomplex:
    keep = lambda k: lie.nweight(k[2]) <= D
    return Bicomplex(lambda p, q: lie_basis(p, q, D, weight),
                     lambda v: lie.d_up(v, D), lambda v: lie.d_right(v, D),
                     keep=keep, total=lambda v: lie.d_tot(v, D), name="Lie")


# ---------------------------------------------------------------------------
# the Hopf bicomplex Omega (x) ^p s* (x) F^{(x) q}

def _f_tuples(q: int, D: int, normalized: bool) -> List[tuple]:
    monos = [jets.ONE] if not normalized else []
    for w in range(1, D + 1):
        monos.extend(jets.monomials(w))
    out = []
    for t in product(monos, repeat=q):
        if hopf.tuple_weight(t) <= D:
            out.append(t)
    return out


def hopf_basis(p: int, q: int, D: int, weight: int = 0, normalized: bool = False) -> List[tuple]:
    out = []
    for S in lie.S_WORDS:
        if len(S) != p:
            continue
        for t in _f_tuples(q, D, normalized):
            for form in _forms_of_weight(weight + sum(S) + hopf.tuple_weight(t)):
                out.append((form, S, t))
    return out


def hopf_bicomplex(D: int, weight: int = 0, normalized: bool = False) -> Bicomplex:
    keep = lambda k: hopf.tuple_weight(k[2]) <= D
    return Bicomplex(lambda p, q: hopf_basis(p, q, D, weight, normalized),
                     lambda v: hopf.d_ce48(v, D), lambda v: hopf.bN_star(v, D),
                     keep=keep, total=lambda v: hopf.d_tot48(v, D), name="Hopf")
