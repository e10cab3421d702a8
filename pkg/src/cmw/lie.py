"""Chevalley-Eilenberg cochains of W_1, s and n with coefficients in Omega^{<=1},
the matched-pair bicomplex for W_1 = s |x| n, the natural isomorphism to its
total complex, cup products, and the generators lambda and mu.

Representations
---------------
* CE cochain over an algebra: FormalSum over ``(form, word)``; ``form`` is a
  form key (``("x", j)`` / ``("f", j)``) and ``word`` a strictly increasing
  tuple of W_1 indices standing for theta^{w1} ^ ... ^ theta^{wk}.
* bicomplex element: FormalSum over ``(form, S, N)`` with S a word in
  {-1, 0} (the s* leg, degree p) and N a word in indices >= 1 (the n* leg,
  degree q).

Sign conventions
----------------
The CE differential is the basis form

    d(m (x) eta) = sum_i m.X_i (x) theta^i ^ eta + m (x) d_DR(eta)

with the right action m.X = -X.m and d_DR(theta^k)(X, Y) = theta^k([X, Y]);
this equals the pointwise formula with signs (-1)^{r+s-1} and (-1)^t.

Windows: the n*-weight of a word (sum of its positive indices) never
decreases under any operator here, so every computation is exact on the
quotient where n*-weight <= D.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence, Tuple

from .core import FormalSum, MalformedInput, add_into, wedge_normalize
from . import vector_fields as vf

ONE_FORM = ("x", 0)
S_WORDS = ((), (-1,), (0,), (-1, 0))


def nweight(word) -> int:
    return sum(i for i in word if i >= 1)


def _in_algebra(i: int, algebra: str) -> bool:
    if algebra == "W1":
        return i >= -1
    if algebra == "s":
        return i in (-1, 0)
    if algebra == "n":
        return i >= 1
    raise MalformedInput("unknown algebra %r" % (algebra,))


def _check_word(word, algebra):
    for i in word:
        if not _in_algebra(i, algebra):
            raise MalformedInput("theta^%d not in %s*" % (i, algebra))


def wedge_prepend(i: int, word: tuple) -> Optional[Tuple[tuple, int]]:
    if i in word:
        return None
    return wedge_normalize((i,) + tuple(word))


def wedge_concat(a: tuple, b: tuple) -> Optional[Tuple[tuple, int]]:
    if set(a) & set(b):
        return None
    return wedge_normalize(tuple(a) + tuple(b))


# ---------------------------------------------------------------------------
# de Rham differential of the exterior algebra g*

def d_dr_theta(k: int, algebra: str, D: int = None) -> dict:
    """d_DR theta^k = sum_{i<j, i+j=k} (j - i) theta^i ^ theta^j (within g)."""
    out = {}
    i = -1
    while 2 * i < k:
        j = k - i
        if _in_algebra(i, algebra) and _in_algebra(j, algebra):
            out[(i, j)] = Fraction(j - i)
        i += 1
    return out


def d_dr(word: Sequence[int], algebra: str = "s", D: int = None) -> FormalSum:
    """d_DR on a wedge word, extended as a derivation of degree 1."""
    word = tuple(word)
    _check_word(word, algebra)
    acc: dict = {}
    for r, k in enumerate(word):
        sgn = -1 if r % 2 else 1
        for pair, c in d_dr_theta(k, algebra).items():
            new = word[:r] + pair + word[r + 1:]
            if len(set(new)) != len(new):
                continue
            if D is not None and nweight(new) > D:
                continue
            w, s = wedge_normalize(new)
            add_into(acc, w, sgn * s * c)
    return FormalSum(acc)


def d_dr_sum(v: FormalSum, algebra: str = "s", D: int = None) -> FormalSum:
    return v.apply(lambda w: d_dr(w, algebra, D))


# ---------------------------------------------------------------------------
# right actions on words (coadjoint, restricted to an ambient subspace)

def right_act_word(word: tuple, p: int, ambient: str) -> dict:
    """(theta^{w1} ^ ... ^ theta^{wk}) . e_p as a derivation."""
    acc: dict = {}
    for r, i in enumerate(word):
        for j, c in vf.coadjoint_basis(i, p, ambient).items():
            new = word[:r] + (j,) + word[r + 1:]
            if len(set(new)) != len(new):
                continue
            w, s = wedge_normalize(new)
            add_into(acc, w, s * c)
    return acc


def right_act_form(form, p: int) -> dict:
    """form . e_p = -e_p . form."""
    return {k: -c for k, c in vf.act_basis(p, form).items()}


# ---------------------------------------------------------------------------
# CE complexes with Omega^{<=1} coefficients (single algebra)

def _module_right(form, p, coefficients):
    if coefficients == "trivial":
        return {}
    return right_act_form(form, p)


def d_ce(c: FormalSum, algebra: str = "W1", coefficients: str = "omega", D: int = None) -> FormalSum:
    """Basis-form CE differential of cochains (form, word) over W1, s or n.

    For W1 and n the sum over X_i is infinite; ``D`` caps the n*-weight of the
    output (exact on the quotient complex).
    """
    if algebra in ("W1", "n") and D is None:
        raise MalformedInput("infinite-dimensional algebra needs a window D")
    acc: dict = {}
    for (form, word), coeff in c.items():
        word = tuple(word)
        _check_word(word, algebra)
        if algebra == "s":
            idx = [-1, 0]
        else:
            lo = -1 if algebra == "W1" else 1
            idx = range(lo, D - nweight(word) + 1)
        for i in idx:
            r = wedge_prepend(i, word)
            if r is None:
                continue
            w, s = r
            for f2, c2 in _module_right(form, i, coefficients).items():
                add_into(acc, (f2, w), coeff * s * c2)
        for w, c2 in d_dr(word, algebra, D).items():
            add_into(acc, (form, w), coeff * c2)
    return FormalSum(acc)


def evaluate(c: FormalSum, args: Sequence[int]) -> FormalSum:
    """Value of a basis-form cochain on (e_{a1}, ..., e_{ak})."""
    args = tuple(args)
    if len(set(args)) != len(args):
        return FormalSum()
    r = wedge_normalize(args)
    w, s = r
    acc: dict = {}
    for (form, word), coeff in c.items():
        if tuple(word) == w:
            add_into(acc, form, coeff * s)
    return FormalSum(acc)


def d_ce_pointwise(c: FormalSum, args: Sequence[int], coefficients: str = "omega") -> FormalSum:
    """(d c)(xi_1..xi_{k+1}) by the pointwise formula:

    sum_{r<s} (-1)^{r+s-1} c([xi_r, xi_s], ...) + sum_t (-1)^t xi_t . c(..^t..)
    (1-based r, s, t).
    """
    args = tuple(args)
    out = FormalSum()
    n = len(args)
    for r in range(n):
        for s in range(r + 1, n):
            br = vf.bracket_w1(args[r], args[s])
            rest = args[:r] + args[r + 1:s] + args[s + 1:]
            sign = -1 if ((r + 1) + (s + 1) - 1) % 2 else 1
            for (_, k), cb in br.items():
                out = out + evaluate(c, (k,) + rest) * (sign * cb)
    if coefficients != "trivial":
        for t in range(n):
            rest = args[:t] + args[t + 1:]
            sign = -1 if (t + 1) % 2 else 1
            out = out + vf.act_on_forms(vf.e(args[t]), evaluate(c, rest)) * sign
    return out


def cup(c1: FormalSum, c2: FormalSum) -> FormalSum:
    """Basis-form cup product: (m (x) eta) u (m' (x) zeta) = m m' (x) eta ^ zeta."""
    acc: dict = {}
    for (f1, w1), a in c1.items():
        for (f2, w2), b in c2.items():
            fk = vf.product_basis(f1, f2)
            if fk is None:
                continue
            r = wedge_concat(w1, w2)
            if r is None:
                continue
            w, s = r
            add_into(acc, (fk, w), a * b * s)
    return FormalSum(acc)


def shuffle_sign(S: Sequence[int], total: int) -> int:
    """(-1)^{nu(S)}: nu(S) counts pairs (s in S, t in complement) with s > t."""
    S = set(S)
    T = [t for t in range(1, total + 1) if t not in S]
    nu = sum(1 for t in T for s in S if s > t)
    return -1 if nu % 2 else 1


def cup_pointwise(c1: FormalSum, p: int, c2: FormalSum, q: int, args: Sequence[int]) -> FormalSum:
    """(c u c')(xi_1..xi_{p+q}) = sum_S (-1)^{nu(S)} c(xi_S) u c'(xi_T)."""
    args = tuple(args)
    if len(args) != p + q:
        raise MalformedInput("wrong number of arguments")
    out = FormalSum()
    for S in combinations(range(1, p + q + 1), p):
        T = [t for t in range(1, p + q + 1) if t not in S]
        a = evaluate(c1, [args[s - 1] for s in S])
        b = evaluate(c2, [args[t - 1] for t in T])
        out = out + vf.module_product(a, b) * shuffle_sign(S, p + q)
    return out


# ---------------------------------------------------------------------------
# the bicomplex C^{p,q} = Omega (x) ^p s* (x) ^q n*

def bidegree(key) -> Tuple[int, int]:
    return len(key[1]), len(key[2])


def bi(form, S=(), N=(), c=1) -> FormalSum:
    """Basis element form (x) theta^S (x) theta^N (words normalized)."""
    r1 = wedge_normalize(tuple(S))
    r2 = wedge_normalize(tuple(N))
    if r1 is None or r2 is None:
        return FormalSum()
    _check_word(r1[0], "s")
    _check_word(r2[0], "n")
    return FormalSum.basis((form, r1[0], r2[0]), Fraction(c) * r1[1] * r2[1])


def d_up(c: FormalSum, D: int = None) -> FormalSum:
    """Vertical (s-direction) differential with coefficients Omega (x) ^q n*.

    up-d(m (x) eta (x) nu) = sum_{X in s} (m (x) nu).X (x) theta^X ^ eta (x)
    + m (x) d_DR(eta) (x) nu, the right action being diagonal on m and nu.
    """
    acc: dict = {}
    for (form, S, N), coeff in c.items():
        for i in (-1, 0):
            r = wedge_prepend(i, S)
            if r is None:
                continue
            S2, s = r
            for f2, c2 in right_act_form(form, i).items():
                add_into(acc, (f2, S2, N), coeff * s * c2)
            for N2, c2 in right_act_word(N, i, "n").items():
                if D is not None and nweight(N2) > D:
                    continue
                add_into(acc, (form, S2, N2), coeff * s * c2)
        for S2, c2 in d_dr(S, "s").items():
            add_into(acc, (form, S2, N), coeff * c2)
    return FormalSum(acc)


def d_right(c: FormalSum, D: int, convention: str = "paper") -> FormalSum:
    """Horizontal (n-direction) differential with coefficients Omega (x) ^p s*.

    The literal basis form is

        (m (x) eta (x) nu) -> sum_j (m (x) eta).e_j (x) theta^j ^ nu + m (x) eta (x) d_DR(nu);

    ``convention="paper"`` (default) returns its negative, the sign under
    which ->d(1 (x) theta^0) = 2 (1 (x) theta^-1 (x) theta^1).
    """
    if convention not in ("paper", "literal"):
        raise MalformedInput("unknown convention %r" % (convention,))
    sg = -1 if convention == "paper" else 1
    acc: dict = {}
    for (form, S, N), coeff in c.items():
        for j in range(1, D - nweight(N) + 1):
            r = wedge_prepend(j, N)
            if r is None:
                continue
            N2, s = r
            for f2, c2 in right_act_form(form, j).items():
                add_into(acc, (f2, S, N2), sg * coeff * s * c2)
            for S2, c2 in right_act_word(S, j, "s").items():
                add_into(acc, (form, S2, N2), sg * coeff * s * c2)
        for N2, c2 in d_dr(N, "n", D).items():
            add_into(acc, (form, S, N2), sg * coeff * c2)
    return FormalSum(acc)


def d_right_pointwise(c: FormalSum, args: Sequence[int]) -> FormalSum:
    """->d(c)(e_{a1}, ...) by the pointwise formula for n with coefficients
    Omega (x) ^p s* (module action xi.(m (x) eta) = -(m (x) eta).xi);
    returns a FormalSum over (form, S)."""
    args = tuple(args)
    n = len(args)

    def ev(cc, a):
        a = tuple(a)
        if len(set(a)) != len(a):
            return FormalSum()
        w, s = wedge_normalize(a)
        return FormalSum({(f, S): x * s for (f, S, N), x in cc.items() if N == w})

    def left(p, v):
        acc: dict = {}
        for (f, S), x in v.items():
            for f2, c2 in right_act_form(f, p).items():
                add_into(acc, (f2, S), -x * c2)
            for S2, c2 in right_act_word(S, p, "s").items():
                add_into(acc, (f, S2), -x * c2)
        return FormalSum(acc)

    out = FormalSum()
    for r in range(n):
        for s in range(r + 1, n):
            br = vf.bracket_w1(args[r], args[s])
            rest = args[:r] + args[r + 1:s] + args[s + 1:]
            sign = -1 if ((r + 1) + (s + 1) - 1) % 2 else 1
            for (_, k), cb in br.items():
                out = out + ev(c, (k,) + rest) * (sign * cb)
    for t in range(n):
        rest = args[:t] + args[t + 1:]
        sign = -1 if (t + 1) % 2 else 1
        out = out + left(args[t], ev(c, rest)) * sign
    return out


def d_tot(c: FormalSum, D: int) -> FormalSum:
    """Total differential transported from d_CE of W_1 by the natural iso:
    up-d + (-1)^p ->d_literal = up-d - (-1)^p ->d (paper sign)."""
    out = d_up(c, D)
    for p in (0, 1, 2):
        part = c.filter(lambda k, p=p: len(k[1]) == p)
        if part:
            out = out + d_right(part, D, "literal") * (-1 if p % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# the natural isomorphism with CE cochains of W_1

def natural_iso(phi: FormalSum) -> FormalSum:
    """W_1 cochain (form, word) -> bicomplex (form, S, N).

    In a sorted word the s-indices precede the n-indices, so the basis
    element theta^S ^ theta^N corresponds to theta^S (x) theta^N with sign +1;
    this matches the restriction formula Phi(X.. | xi..)."""
    acc: dict = {}
    for (form, word), c in phi.items():
        S = tuple(i for i in word if i <= 0)
        N = tuple(i for i in word if i >= 1)
        add_into(acc, (form, S, N), c)
    return FormalSum(acc)


def natural_iso_inv(c: FormalSum) -> FormalSum:
    acc: dict = {}
    for (form, S, N), x in c.items():
        add_into(acc, (form, tuple(S) + tuple(N)), x)
    return FormalSum(acc)


def natural_iso_inv_eval(c: FormalSum, args: Sequence[Tuple[int, int]]) -> FormalSum:
    """Shuffle formula: natural^{-1}(w (x) mu (x) nu)(X_1 + xi_1, ...)
    = sum over (p,q)-shuffles sigma of (-1)^sigma w mu(X_sigma..) nu(xi_sigma..).

    ``args`` are pairs (X, xi) of W_1 indices with X in s and xi in n, or
    None for a zero component.
    """
    out = FormalSum()
    k = len(args)
    for (form, S, N), x in c.items():
        p, q = len(S), len(N)
        if p + q != k:
            continue
        for Sidx in combinations(range(k), p):
            T = [t for t in range(k) if t not in Sidx]
            sign = shuffle_sign([s + 1 for s in Sidx], k)
            Xs = [args[s][0] for s in Sidx]
            xis = [args[t][1] for t in T]
            if any(a is None for a in Xs) or any(a is None for a in xis):
                continue
            v1 = _word_value(S, Xs)
            v2 = _word_value(N, xis)
            if v1 and v2:
                out = out + FormalSum.basis(form, x * sign * v1 * v2)
    return out


def _word_value(word, args) -> int:
    """(theta^{w1} ^ ... ^ theta^{wk})(e_{a1}, ..., e_{ak}) for basis vectors."""
    if len(word) != len(args):
        return 0
    if not word:
        return 1
    if len(set(args)) != len(args) or sorted(args) != sorted(word):
        return 0
    r = wedge_normalize(tuple(args))
    return r[1]


def tot_cup(a: FormalSum, b: FormalSum) -> FormalSum:
    """(a (x) mu (x) nu) u (w (x) lam (x) rho) = (-1)^{q p'} a w (x) mu^lam (x) nu^rho."""
    acc: dict = {}
    for (f1, S1, N1), x in a.items():
        q = len(N1)
        for (f2, S2, N2), y in b.items():
            p2 = len(S2)
            fk = vf.product_basis(f1, f2)
            if fk is None:
                continue
            r1 = wedge_concat(S1, S2)
            r2 = wedge_concat(N1, N2)
            if r1 is None or r2 is None:
                continue
            sgn = r1[1] * r2[1] * (-1 if (q * p2) % 2 else 1)
            add_into(acc, (fk, r1[0], r2[0]), x * y * sgn)
    return FormalSum(acc)


def truncate_n(c: FormalSum, D: int) -> FormalSum:
    """Keep bicomplex terms whose n*-weight is <= D."""
    return c.filter(lambda k: nweight(k[2]) <= D)


# ---------------------------------------------------------------------------
# generators

def lam(D: int) -> FormalSum:
    """lambda = 1 (x) theta^0 + sum_{1<=i<=D} (i+1) x^i (x) theta^i."""
    return bi(ONE_FORM, (0,)) + lam_n(D)


def lam_n(D: int) -> FormalSum:
    return FormalSum({(("x", i), (), (i,)): i + 1 for i in range(1, D + 1)})


def mu(D: int) -> FormalSum:
    """mu = sum_{1<=i<=D} (i+1) i f^{i-1} (x) theta^i."""
    return FormalSum({(("f", i - 1), (), (i,)): (i + 1) * i for i in range(1, D + 1)})


def build_lie_generators(D: int):
    return lam(D), mu(D)


def as_w1_cochain(c: FormalSum) -> FormalSum:
    return natural_iso_inv(c)


def divergence(xi: FormalSum) -> FormalSum:
    """div(sum c_i x^{i+1} d/dx) = sum (i+1) c_i x^i."""
    acc: dict = {}
    for (_, i), c in xi.items():
        if i >= 0:
            add_into(acc, ("x", i), (i + 1) * c)
    return FormalSum(acc)


def exterior_d(w: FormalSum) -> FormalSum:
    """d on functions: x^j -> j x^{j-1} dx."""
    acc: dict = {}
    for (tag, j), c in w.items():
        if tag == "x" and j >= 1:
            add_into(acc, ("f", j - 1), j * c)
    return FormalSum(acc)
