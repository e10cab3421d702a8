"""The bicrossed product H = F(N) >|< U(s), its SAYD module Omega_delta, the
cocyclic module C(H, Omega_delta), and the bicomplexes that compute its
cyclic cohomology.

Keys
----
* F(N) monomial: sorted int tuple (see :mod:`cmw.jets`); an F-tuple
  ``(m1, ..., mq)`` stands for m1 (x) ... (x) mq.
* U(s) PBW word ``(a, b)`` = e_{-1}^a e_0^b.
* H basis element ``(m, (a, b))`` = m >|< e_{-1}^a e_0^b.
* cochain of C^q(H, Omega): ``(form, (h1, ..., hq))``.
* bicomplex element: ``(form, S, (m1, ..., mq))`` with S a word in {-1, 0}
  (the s* leg) for the de Rham-type bicomplex, or in {-1, 0} read as
  e-vectors for the homology-type bicomplex.
* diagonal element: ``(form, (u1, ..., up), (m1, ..., mq))``.

Window
------
Every function takes the cap ``D`` on the total F(N)-weight (sum of the
weights of all F(N) factors, including those inside H elements).  No
operator lowers this weight on surviving terms (the counit kills positive
weight, everything else preserves or raises it), so all identities are
exact modulo F-weight > D.  The only infinite sum -- the F(N)-coaction on
Omega -- is cut at the same place.

Conventions (see the ledger for the reasoning)
----------------------------------------------
* s acts on F(N) by the vector-field-bracket representation
  (``jets.s_act``), U(s) has the vector-field bracket e_0 e_-1 = e_-1 e_0 - e_-1.
* the U(s)-coaction dualizes the n-action e_j |> X = -proj_s [e_j, X]; on
  generators e_0 -> e_0 (x) 1, e_-1 -> e_-1 (x) 1 + 2 e_0 (x) x_1.
* delta is the character with delta(e_-1) = 0 and delta(e_0) = DELTA0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Dict, Tuple

from .core import FormalSum, MalformedInput, add_into, wedge_normalize
from . import jets
from . import vector_fields as vf
from .jets import ONE, mono_mul
from .lie import d_dr, wedge_prepend, wedge_concat

DELTA0 = Fraction(-1)
U1 = (0, 0)
E_M1 = (1, 0)
E_0 = (0, 1)
H1 = (ONE, U1)


def _fw(m) -> int:
    return sum(m)


def tuple_weight(t) -> int:
    return sum(sum(m) for m in t)


def _d(acc, k, c):
    add_into(acc, k, c)


# ---------------------------------------------------------------------------
# F(N) helpers

@lru_cache(maxsize=None)
def delta_iter(m, k: int) -> Dict[tuple, Fraction]:
    """k-fold coproduct of a monomial as {(m1..mk): c}; k = 0 is the counit."""
    if k == 0:
        return {(): Fraction(1)} if not m else {}
    return dict(jets.iterated_coproduct(FormalSum.basis(m), k).items())


@lru_cache(maxsize=None)
def s_antipode(m) -> Dict[tuple, Fraction]:
    return dict(jets.antipode_mono(m).items())


def f_act_tuple(m, t: tuple, D: int) -> dict:
    """m . (g1 (x) ... (x) gk) = m_(1) g1 (x) ... (x) m_(k) gk."""
    out: dict = {}
    if tuple_weight(t) + _fw(m) > D:
        return out
    for legs, c in delta_iter(m, len(t)).items():
        _d(out, tuple(mono_mul(a, b) for a, b in zip(legs, t)), c)
    return out


def f_mul_dict(a: dict, b: dict, D: int) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            if _fw(m1) + _fw(m2) <= D:
                _d(out, mono_mul(m1, m2), c1 * c2)
    return out


# ---------------------------------------------------------------------------
# U(s)

@lru_cache(maxsize=None)
def us_mul(u, v) -> Dict[tuple, Fraction]:
    """e_-1^a e_0^b e_-1^c e_0^d = e_-1^{a+c} (e_0 - c)^b e_0^d."""
    a, b = u
    c, d = v
    out: dict = {}
    for k in range(b + 1):
        _d(out, (a + c, k + d), Fraction(comb(b, k)) * Fraction(-c) ** (b - k))
    return out


@lru_cache(maxsize=None)
def us_coproduct(u) -> Dict[tuple, Fraction]:
    a, b = u
    out = {}
    for i in range(a + 1):
        for j in range(b + 1):
            out[((i, j), (a - i, b - j))] = Fraction(comb(a, i) * comb(b, j))
    return out


@lru_cache(maxsize=None)
def us_antipode(u) -> Dict[tuple, Fraction]:
    a, b = u
    s = -1 if (a + b) % 2 else 1
    return {k: s * c for k, c in us_mul((0, b), (a, 0)).items()}


def us_counit(u) -> Fraction:
    return Fraction(1) if u == U1 else Fraction(0)


def delta_char(u, delta0=None) -> Fraction:
    d0 = DELTA0 if delta0 is None else Fraction(delta0)
    a, b = u
    if a:
        return Fraction(0)
    return d0 ** b


def us_letters(u):
    a, b = u
    return (-1,) * a + (0,) * b


@lru_cache(maxsize=None)
def us_act_F(u, m, D: int) -> Dict[tuple, Fraction]:
    """u |> m for u in U(s) (rightmost letter acts first), F-weight <= D."""
    cur = {m: Fraction(1)}
    for X in reversed(us_letters(u)):
        nxt: dict = {}
        for mm, c in cur.items():
            if X == -1 and _fw(mm) + 1 > D:
                continue
            for m2, c2 in jets.s_act(X, FormalSum.basis(mm)).items():
                _d(nxt, m2, c * c2)
        cur = nxt
        if not cur:
            break
    return cur


def us_act_omega(u, form) -> Dict[tuple, Fraction]:
    """u . omega with the Lie-derivative action of s."""
    cur = {form: Fraction(1)}
    for X in reversed(us_letters(u)):
        nxt: dict = {}
        for f, c in cur.items():
            for f2, c2 in vf.act_basis(X, f).items():
                _d(nxt, f2, c * c2)
        cur = nxt
    return cur


@lru_cache(maxsize=None)
def s_coaction_gen(X: int, D: int) -> Dict[tuple, Fraction]:
    """Right F-coaction on s: {(PBW letter word, monomial): c}."""
    raw = jets.coact_right(X, jets.n_act_s, max(D, 1))
    out = {}
    for (i, m), c in raw.items():
        if _fw(m) <= D:
            out[((1, 0) if i == -1 else (0, 1), m)] = c
    return out


@lru_cache(maxsize=None)
def us_coaction(u, D: int) -> Dict[tuple, Fraction]:
    """Right coaction U(s) -> U(s) (x) F(N), multiplicative in the matched-pair
    sense: (Xv)<0> (x) (Xv)<1> = X<0>v<0> (x) X<1>v<1> + v<0> (x) X |> v<1>."""
    if u == U1:
        return {(U1, ONE): Fraction(1)}
    a, b = u
    if a:
        X, rest = -1, (a - 1, b)
    else:
        X, rest = 0, (0, b - 1)
    xu = (1, 0) if X == -1 else (0, 1)
    out: dict = {}
    inner = us_coaction(rest, D)
    for (X0, X1), cx in s_coaction_gen(X, D).items():
        for (v0, v1), cv in inner.items():
            if _fw(X1) + _fw(v1) > D:
                continue
            m = mono_mul(X1, v1)
            for w, cw in us_mul(X0, v0).items():
                _d(out, (w, m), cx * cv * cw)
    for (v0, v1), cv in inner.items():
        for m2, c2 in us_act_F(xu, v1, D).items():
            _d(out, (v0, m2), cv * c2)
    return out


def us_coaction_iter(u, k: int, D: int) -> dict:
    """u<0> (x) u<1> (x) ... (x) u<k>: {(u0, (m1..mk)): c}."""
    if k == 0:
        return {(u, ()): Fraction(1)}
    out: dict = {}
    for (u0, m), c in us_coaction(u, D).items():
        for legs, c2 in delta_iter(m, k).items():
            _d(out, (u0, legs), c * c2)
    return out


# ---------------------------------------------------------------------------
# the bicrossed product H = F(N) >|< U(s)

def h_trunc(d: dict, D: int) -> dict:
    return {k: c for k, c in d.items() if _fw(k[0]) <= D}


@lru_cache(maxsize=None)
def h_mul(h1, h2, D: int) -> Dict[tuple, Fraction]:
    """(f >|< u)(g >|< v) = f (u_(1) |> g) >|< u_(2) v."""
    f, u = h1
    g, v = h2
    out: dict = {}
    for (u1, u2), c in us_coproduct(u).items():
        for g2, cg in us_act_F(u1, g, D).items():
            if _fw(f) + _fw(g2) > D:
                continue
            fm = mono_mul(f, g2)
            for w, cw in us_mul(u2, v).items():
                _d(out, (fm, w), c * cg * cw)
    return out


@lru_cache(maxsize=None)
def h_coproduct(h, D: int) -> Dict[tuple, Fraction]:
    """f_(1) >|< u_(1)<0> (x) f_(2) u_(1)<1> >|< u_(2)."""
    f, u = h
    out: dict = {}
    for (f1, f2), cf in delta_iter(f, 2).items():
        for (u1, u2), cu in us_coproduct(u).items():
            for (u10, u11), cc in us_coaction(u1, D).items():
                if _fw(f1) + _fw(f2) + _fw(u11) > D:
                    continue
                _d(out, ((f1, u10), (mono_mul(f2, u11), u2)), cf * cu * cc)
    return out


def h_counit(h) -> Fraction:
    return Fraction(1) if h == H1 else Fraction(0)


@lru_cache(maxsize=None)
def h_antipode(h, D: int) -> Dict[tuple, Fraction]:
    """S(f >|< u) = (1 >|< S(u<0>)) (S(f u<1>) >|< 1)."""
    f, u = h
    out: dict = {}
    for (u0, u1), c in us_coaction(u, D).items():
        if _fw(f) + _fw(u1) > D:
            continue
        for sm, cs in s_antipode(mono_mul(f, u1)).items():
            for w, cw in us_antipode(u0).items():
                for k, ck in h_mul((ONE, w), (sm, U1), D).items():
                    _d(out, k, c * cs * cw * ck)
    return out


def h_mul_sum(a: FormalSum, b: FormalSum, D: int) -> FormalSum:
    out: dict = {}
    for h1, c1 in a.items():
        for h2, c2 in b.items():
            for k, c in h_mul(h1, h2, D).items():
                _d(out, k, c1 * c2 * c)
    return FormalSum(out)


@lru_cache(maxsize=None)
def h_delta_iter(h, k: int, D: int) -> Dict[tuple, Fraction]:
    """k-fold coproduct of an H basis element; k = 0 gives the counit."""
    if k == 0:
        return {(): Fraction(1)} if h == H1 else {}
    if k == 1:
        return {(h,): Fraction(1)}
    out: dict = {}
    for legs, c in h_delta_iter(h, k - 1, D).items():
        for (a, b), c2 in h_coproduct(legs[-1], D).items():
            t = legs[:-1] + (a, b)
            if sum(_fw(x[0]) for x in t) <= D:
                _d(out, t, c * c2)
    return out


def h_act_tuple(h, t: tuple, D: int) -> dict:
    """h . (k1 (x) ... (x) kq) = h_(1) k1 (x) ... (x) h_(q) kq (left multiplication)."""
    out: dict = {}
    for legs, c in h_delta_iter(h, len(t), D).items():
        parts = [dict()]
        parts = [({(): c})]
        cur = {(): c}
        for a, b in zip(legs, t):
            nxt: dict = {}
            for pre, cp in cur.items():
                for k, ck in h_mul(a, b, D).items():
                    nt = pre + (k,)
                    if sum(_fw(x[0]) for x in nt) <= D:
                        _d(nxt, nt, cp * ck)
            cur = nxt
        for k, ck in cur.items():
            _d(out, k, ck)
    return out


# ---------------------------------------------------------------------------
# Omega: F-coaction, SAYD action and coaction

@lru_cache(maxsize=None)
def omega_coaction(form, D: int) -> Dict[tuple, Fraction]:
    """Right F(N)-coaction omega -> omega<0> (x) omega<1>, cut at F-weight D."""
    return dict(jets.coact_right(form, jets.n_act_omega, D).items())


def sayd_coaction(form, D: int) -> Dict[tuple, Fraction]:
    """Left H-coaction omega -> (S(omega<1>) >|< 1) (x) omega<0>."""
    out: dict = {}
    for (w0, m), c in omega_coaction(form, D).items():
        for sm, cs in s_antipode(m).items():
            _d(out, ((sm, U1), w0), c * cs)
    return out


def sayd_action(form, h, delta0=None) -> Dict[tuple, Fraction]:
    """omega . (f >|< u) = eps(f) delta(u_(1)) S(u_(2)) . omega."""
    f, u = h
    if f:
        return {}
    out: dict = {}
    for (u1, u2), c in us_coproduct(u).items():
        dc = delta_char(u1, delta0)
        if not dc:
            continue
        for w, cw in us_antipode(u2).items():
            for f2, c2 in us_act_omega(w, form).items():
                _d(out, f2, c * dc * cw * c2)
    return out


# ---------------------------------------------------------------------------
# the cocyclic module C^q(H, Omega_delta) = Omega (x) H^{(x) q}

def _hw(t) -> int:
    return sum(_fw(h[0]) for h in t)


def face(i: int, c: FormalSum, q: int, D: int, delta0=None) -> FormalSum:
    if not 0 <= i <= q + 1:
        raise MalformedInput("face index %d out of range for degree %d" % (i, q))
    out: dict = {}
    for (form, t), x in c.items():
        if len(t) != q:
            raise MalformedInput("cochain degree mismatch")
        if i == 0:
            _d(out, (form, (H1,) + t), x)
        elif i <= q:
            for (a, b), cc in h_coproduct(t[i - 1], D).items():
                nt = t[:i - 1] + (a, b) + t[i:]
                if _hw(nt) <= D:
                    _d(out, (form, nt), x * cc)
        else:
            for (h, w0), cc in sayd_coaction(form, D).items():
                nt = t + (h,)
                if _hw(nt) <= D:
                    _d(out, (w0, nt), x * cc)
    return FormalSum(out)


def degeneracy(j: int, c: FormalSum, q: int) -> FormalSum:
    if not 0 <= j < q:
        raise MalformedInput("degeneracy index %d out of range for degree %d" % (j, q))
    out: dict = {}
    for (form, t), x in c.items():
        e = h_counit(t[j])
        if e:
            _d(out, (form, t[:j] + t[j + 1:]), x * e)
    return FormalSum(out)


def cyclic(c: FormalSum, q: int, D: int, delta0=None) -> FormalSum:
    """t(v (x) h^1 (x) ... (x) h^q) = v<0> h^1_(1) (x) S(h^1_(2)) . (h^2 .. h^q (x) v<-1>)."""
    out: dict = {}
    for (form, t), x in c.items():
        if q == 0:
            _d(out, (form, ()), x)
            continue
        h1, rest = t[0], t[1:]
        for (v_1, v0), cv in sayd_coaction(form, D).items():
            tail = rest + (v_1,)
            if _hw(tail) + _fw(h1[0]) > D:
                continue
            for (a, b), cab in h_coproduct(h1, D).items():
                vals = sayd_action(v0, a, delta0)
                if not vals:
                    continue
                for sb, cs in h_antipode(b, D).items():
                    for nt, ct in h_act_tuple(sb, tail, D).items():
                        for f2, cf in vals.items():
                            _d(out, (f2, nt), x * cv * cab * cs * ct * cf)
    return FormalSum(out)


def hochschild_b(c: FormalSum, q: int, D: int, delta0=None) -> FormalSum:
    out = FormalSum()
    for i in range(q + 2):
        out = out + face(i, c, q, D, delta0) * (-1 if i % 2 else 1)
    return out


def connes_B(c: FormalSum, q1: int, D: int, delta0=None) -> FormalSum:
    """B : C^{q+1} -> C^q, B = (sum_i (-1)^{qi} t_q^i) s_q t_{q+1} (1 - (-1)^{q+1} t_{q+1})."""
    q = q1 - 1
    if q < 0:
        raise MalformedInput("B needs degree >= 1")
    x = c - cyclic(c, q1, D, delta0) * (-1 if (q + 1) % 2 else 1)
    x = cyclic(x, q1, D, delta0)
    x = degeneracy(q, x, q1)
    out = FormalSum()
    y = x
    for i in range(q + 1):
        out = out + y * (-1 if (q * i) % 2 else 1)
        y = cyclic(y, q, D, delta0)
    return out


def total_bB_defect(components: Dict[int, FormalSum], D: int, delta0=None) -> Dict[int, FormalSum]:
    """For c = sum_k c_k (k of one parity), return {k+1: b c_k + B c_{k+2}}."""
    out = {}
    degs = sorted(components)
    lo, hi = degs[0], degs[-1]
    for k in range(lo - 1, hi + 2, 2):
        v = FormalSum()
        if k - 1 in components:
            v = v + hochschild_b(components[k - 1], k - 1, D, delta0)
        if k + 1 in components:
            v = v + connes_B(components[k + 1], k + 1, D, delta0)
        if k >= 0:
            out[k] = v
    return out


# ---------------------------------------------------------------------------
# the bicomplex Omega (x) ^p s* (x) F^{(x) q} (de Rham side)

@lru_cache(maxsize=None)
def sstar_coaction_gen(i: int, D: int) -> Dict[tuple, Fraction]:
    """Left F-coaction on s*: theta^i -> {(monomial, i'): c}."""
    raw = jets.coact_left(i, jets.n_ract_sstar, max(D, 1))
    return {k: c for k, c in raw.items() if _fw(k[0]) <= D}


@lru_cache(maxsize=None)
def sstar_coaction(S: tuple, D: int) -> Dict[tuple, Fraction]:
    """Multiplicative extension to wedge words: {(monomial, S'): c}."""
    cur = {(ONE, ()): Fraction(1)}
    for i in S:
        nxt: dict = {}
        for (m, w), c in cur.items():
            for (m2, j), c2 in sstar_coaction_gen(i, D).items():
                if _fw(m) + _fw(m2) > D:
                    continue
                r = wedge_concat(w, (j,))
                if r is None:
                    continue
                w2, s = r
                _d(nxt, (mono_mul(m, m2), w2), c * c2 * s)
        cur = nxt
    return cur


def bN_star(c: FormalSum, D: int) -> FormalSum:
    """Horizontal coboundary:

    w (x) eta (x) 1 (x) f~ + sum_i (-1)^i w (x) eta (x) Delta_i f~
    + (-1)^{q+1} w<0> (x) eta<0> (x) f~ (x) S(w<1>) eta<-1>.
    """
    out: dict = {}
    for (form, S, t), x in c.items():
        q = len(t)
        _d(out, (form, S, (ONE,) + t), x)
        for i in range(q):
            for (a, b), cc in delta_iter(t[i], 2).items():
                _d(out, (form, S, t[:i] + (a, b) + t[i + 1:]), x * cc * (-1 if (i + 1) % 2 else 1))
        sg = -1 if (q + 1) % 2 else 1
        base = tuple_weight(t)
        for (w0, m), cw in omega_coaction(form, D).items():
            if base + _fw(m) > D:
                continue
            sm = s_antipode(m)
            for (me, S2), ce in sstar_coaction(S, D).items():
                if base + _fw(m) + _fw(me) > D:
                    continue
                for k, ck in sm.items():
                    _d(out, (w0, S2, t + (mono_mul(k, me),)), x * sg * cw * ce * ck)
    return FormalSum(out)


def bullet(X: int, t: tuple, D: int) -> dict:
    """X . (f1 (x) ... (x) fq) = X<0> |> f1 (x) X<1> . (f2..fq) + f1 (x) X . (f2..fq)."""
    if not t:
        return {}
    out: dict = {}
    f1, rest = t[0], t[1:]
    for (X0, X1), c in s_coaction_gen(X, D).items():
        for g, cg in us_act_F(X0, f1, D).items():
            if rest:
                for r2, cr in f_act_tuple(X1, rest, D).items():
                    nt = (g,) + r2
                    if tuple_weight(nt) <= D:
                        _d(out, nt, c * cg * cr)
            else:
                if not X1:
                    _d(out, (g,), c * cg)
    for r2, cr in bullet(X, rest, D).items():
        _d(out, (f1,) + r2, cr)
    return out


def d_ce48(c: FormalSum, D: int) -> FormalSum:
    """Vertical coboundary:

    w (x) d_DR eta (x) f~ - X_i . w (x) theta^i ^ eta (x) f~ - w (x) theta^i ^ eta (x) X_i . f~.
    """
    out: dict = {}
    for (form, S, t), x in c.items():
        for S2, cd in d_dr(S, "s").items():
            _d(out, (form, S2, t), x * cd)
        for i in (-1, 0):
            r = wedge_prepend(i, S)
            if r is None:
                continue
            S2, s = r
            for f2, cf in vf.act_basis(i, form).items():
                _d(out, (f2, S2, t), -x * s * cf)
            for t2, ct in bullet(i, t, D).items():
                _d(out, (form, S2, t2), -x * s * ct)
    return FormalSum(out)


def d_tot48(c: FormalSum, D: int) -> FormalSum:
    """d_CE + (-1)^p b_N^*."""
    out = d_ce48(c, D)
    for p in (0, 1, 2):
        part = c.filter(lambda k, p=p: len(k[1]) == p)
        if part:
            out = out + bN_star(part, D) * (-1 if p % 2 else 1)
    return out


def cup413(a: FormalSum, b: FormalSum, D: int) -> FormalSum:
    """(a (x) eta (x) f~) u (w (x) zeta (x) g~)
    = a<0> w (x) eta<0> ^ zeta (x) f~ (x) S(a<1>) eta<-1> . g~."""
    out: dict = {}
    for (fa, S1, t1), x in a.items():
        for (fb, S2, t2), y in b.items():
            base = tuple_weight(t1) + tuple_weight(t2)
            for (a0, am), ca in omega_coaction(fa, D).items():
                if base + _fw(am) > D:
                    continue
                prod = vf.product_basis(a0, fb)
                if prod is None:
                    continue
                sa = s_antipode(am)
                for (me, S1b), ce in sstar_coaction(S1, D).items():
                    if base + _fw(am) + _fw(me) > D:
                        continue
                    r = wedge_concat(S1b, S2)
                    if r is None:
                        continue
                    Sw, sg = r
                    for k, ck in sa.items():
                        h = mono_mul(k, me)
                        for t3, c3 in f_act_tuple(h, t2, D).items():
                            _d(out, (prod, Sw, t1 + t3), x * y * ca * ce * ck * c3 * sg)
    return FormalSum(out)


def star(a: FormalSum, b: FormalSum, D: int) -> FormalSum:
    """a * b = (-1)^{q p'} a u b on homogeneous components."""
    out = FormalSum()
    for k1, x in a.items():
        for k2, y in b.items():
            s = -1 if (len(k1[2]) * len(k2[1])) % 2 else 1
            out = out + cup413(FormalSum.basis(k1, x), FormalSum.basis(k2, y), D) * s
    return out


# ---------------------------------------------------------------------------
# van Est map to the Lie bicomplex

def _lin(m) -> int:
    """Index j with <m, e_j> != 0 for a monomial (only x_j itself), else 0."""
    return m[0] if len(m) == 1 else 0


def van_est(c: FormalSum) -> FormalSum:
    """w (x) eta (x) f1..fq -> w (x) eta (x) l(f1) ^ ... ^ l(fq), l(f) = sum_j <f, e_j> theta^j."""
    out: dict = {}
    for (form, S, t), x in c.items():
        idx = []
        for m in t:
            j = _lin(m)
            if not j:
                break
            idx.append(j)
        else:
            r = wedge_normalize(tuple(idx))
            if r is None:
                continue
            N, s = r
            _d(out, (form, S, N), x * s)
    return FormalSum(out)


# ---------------------------------------------------------------------------
# homology-side bicomplex Omega_delta (x) ^p s (x) F^{(x) q}

VOLUME = (-1, 0)  # e_-1 ^ e_0


def contract(eta: tuple, vec: tuple):
    """iota_eta on the basis wedge e_vec, iota_{t^a ^ t^b} = iota_{t^b} iota_{t^a}.
    Returns (word, sign) or None."""
    cur, sign = tuple(vec), 1
    for a in eta:
        if a not in cur:
            return None
        pos = cur.index(a)
        sign *= -1 if pos % 2 else 1
        cur = cur[:pos] + cur[pos + 1:]
    return cur, sign


def poincare(c: FormalSum) -> FormalSum:
    """w (x) eta (x) f~ -> w (x) iota_eta(e_-1 ^ e_0) (x) f~."""
    out: dict = {}
    for (form, S, t), x in c.items():
        r = contract(S, VOLUME)
        if r is None:
            continue
        w, s = r
        _d(out, (form, w, t), x * s)
    return FormalSum(out)


def poincare_inv(c: FormalSum) -> FormalSum:
    out: dict = {}
    for (form, w, t), x in c.items():
        for S in ((), (-1,), (0,), (-1, 0)):
            r = contract(S, VOLUME)
            if r is not None and r[0] == tuple(w):
                _d(out, (form, S, t), x * r[1])
                break
    return FormalSum(out)


@lru_cache(maxsize=None)
def s_wedge_coaction(w: tuple, D: int) -> Dict[tuple, Fraction]:
    """Right F-coaction on ^s (multiplicative): {(word, monomial): c}."""
    cur = {((), ONE): Fraction(1)}
    for i in w:
        nxt: dict = {}
        for (ww, m), c in cur.items():
            for (X0, m2), c2 in s_coaction_gen(i, D).items():
                j = -1 if X0 == (1, 0) else 0
                r = wedge_concat(ww, (j,))
                if r is None or _fw(m) + _fw(m2) > D:
                    continue
                _d(nxt, (r[0], mono_mul(m, m2)), c * c2 * r[1])
        cur = nxt
    return cur


def bN(c: FormalSum, D: int) -> FormalSum:
    """Horizontal coboundary of the homology-side bicomplex, last term
    (-1)^{q+1} w<0> (x) eta<0> (x) f~ (x) S(eta<1>) S(w<1>)."""
    out: dict = {}
    for (form, w, t), x in c.items():
        q = len(t)
        _d(out, (form, w, (ONE,) + t), x)
        for i in range(q):
            for (a, b), cc in delta_iter(t[i], 2).items():
                _d(out, (form, w, t[:i] + (a, b) + t[i + 1:]), x * cc * (-1 if (i + 1) % 2 else 1))
        sg = -1 if (q + 1) % 2 else 1
        base = tuple_weight(t)
        for (w0, m), cw in omega_coaction(form, D).items():
            if base + _fw(m) > D:
                continue
            for (ww, me), ce in s_wedge_coaction(tuple(w), D).items():
                if base + _fw(m) + _fw(me) > D:
                    continue
                for k, ck in f_mul_dict(s_antipode(me), s_antipode(m), D).items():
                    _d(out, (w0, ww, t + (k,)), x * sg * cw * ce * ck)
    return FormalSum(out)


def partial_ce(c: FormalSum, D: int, delta0=None) -> FormalSum:
    """Lie algebra homology boundary of s with coefficients Omega_delta (x) F^{(x)q}:

    d(m (x) X_1 ^ ... ^ X_p) = sum_i (-1)^{i+1} m.X_i (x) ..^i..
                               + sum_{i<j} (-1)^{i+j} m (x) [X_i, X_j] ^ ..^i..^j..,
    with (w (x) f~).X = w.X (x) f~ - w (x) X . f~ and w.X = delta(X) w - X.w.
    """
    d0 = DELTA0 if delta0 is None else Fraction(delta0)
    out: dict = {}
    for (form, w, t), x in c.items():
        w = tuple(w)
        p = len(w)
        for i, X in enumerate(w):
            rest = w[:i] + w[i + 1:]
            sg = x * (1 if i % 2 == 0 else -1)
            if X == 0 and d0:
                _d(out, (form, rest, t), sg * d0)
            for f2, cf in vf.act_basis(X, form).items():
                _d(out, (f2, rest, t), -sg * cf)
            for t2, ct in bullet(X, t, D).items():
                _d(out, (form, rest, t2), -sg * ct)
        for i in range(p):
            for j in range(i + 1, p):
                br = vf.bracket_w1(w[i], w[j])
                rest = w[:i] + w[i + 1:j] + w[j + 1:]
                sg = -1 if ((i + 1) + (j + 1)) % 2 else 1
                for (_, k), cb in br.items():
                    r = wedge_prepend(k, rest)
                    if r is None:
                        continue
                    _d(out, (form, r[0], t), x * sg * cb * r[1])
    return FormalSum(out)


# ---------------------------------------------------------------------------
# antisymmetrization, Alexander-Whitney and Psi

def alpha(c: FormalSum) -> FormalSum:
    """w (x) X^1 ^ ... ^ X^p (x) f~ -> (1/p!) sum_sigma (-1)^sigma w (x) X^sigma(1) (x) ... (x) f~."""
    out: dict = {}
    for (form, w, t), x in c.items():
        p = len(w)
        for perm in permutations(range(p)):
            word = tuple(w[i] for i in perm)
            s = wedge_normalize(word)[1]
            us = tuple((1, 0) if i == -1 else (0, 1) for i in word)
            _d(out, (form, us, t), x * s / factorial(p))
    return FormalSum(out)


def skew_projection(c: FormalSum) -> FormalSum:
    """Antisymmetrize the U(s) legs when they are single letters (inverse side of alpha)."""
    out: dict = {}
    for (form, us, t), x in c.items():
        letters = []
        for u in us:
            if u == (1, 0):
                letters.append(-1)
            elif u == (0, 1):
                letters.append(0)
            else:
                break
        else:
            r = wedge_normalize(tuple(letters))
            if r is None:
                continue
            _d(out, (form, r[0], t), x * r[1])
    return FormalSum(out)


def aw_diag(c: FormalSum) -> FormalSum:
    """(p, q) element w (x) u^1..u^p (x) f^1..f^q -> the diagonal element of
    degree p + q: w (x) u^1..u^p (x) 1^{q} (x) 1^{p} (x) f^1..f^q."""
    out: dict = {}
    for (form, us, t), x in c.items():
        p, q = len(us), len(t)
        _d(out, (form, tuple(us) + (U1,) * q, (ONE,) * p + tuple(t)), x)
    return FormalSum(out)


def psi(c: FormalSum, D: int) -> FormalSum:
    """w (x) u^1..u^n (x) f^1..f^n ->
    w (x) f^1 >|< u^1<0> (x) f^2 u^1<1> >|< u^2<0> (x) ... (x) f^n u^1<n-1>...u^{n-1}<1> >|< u^n."""
    out: dict = {}
    for (form, us, t), x in c.items():
        n = len(us)
        if len(t) != n:
            raise MalformedInput("diagonal element needs p == q")
        # state: list of H legs so far, and pending F factors for later legs
        states = {((), tuple([ONE] * n)): x}
        for k in range(n):
            nxt: dict = {}
            for (legs, pend), c0 in states.items():
                if k == n - 1:
                    m = mono_mul(t[k], pend[k])
                    if tuple_weight(tuple(h[0] for h in legs)) + _fw(m) > D:
                        continue
                    _d(nxt, (legs + ((m, us[k]),), pend), c0)
                    continue
                for (u0, coleg), cc in us_coaction_iter(us[k], n - 1 - k, D).items():
                    m = mono_mul(t[k], pend[k])
                    newpend = list(pend)
                    for r, g in enumerate(coleg):
                        newpend[k + 1 + r] = mono_mul(newpend[k + 1 + r], g)
                    tot = tuple_weight(tuple(h[0] for h in legs)) + _fw(m) + sum(_fw(z) for z in newpend[k + 1:])
                    if tot > D:
                        continue
                    _d(nxt, (legs + ((m, u0),), tuple(newpend)), c0 * cc)
            states = nxt
        for (legs, _), c0 in states.items():
            _d(out, (form, legs), c0)
    return FormalSum(out)


def psi_inv(c: FormalSum, D: int) -> FormalSum:
    """w (x) f^1>|<u^1 (x) ... (x) f^n>|<u^n ->
    w (x) u^1<0> .. u^{n-1}<0> (x) u^n (x) f^1 (x) f^2 S(u^1<n-1>) (x) ...
    (x) f^n S(u^1<1> ... u^{n-1}<1>)."""
    out: dict = {}
    for (form, legs), x in c.items():
        n = len(legs)
        fs = [h[0] for h in legs]
        us = [h[1] for h in legs]
        # corrections: leg r (0-based, r >= 1) gets S(prod_{k<r} u^k<n-r+... >)
        states = {((), tuple([ONE] * n)): x}
        for k in range(n):
            nxt: dict = {}
            for (u0s, corr), c0 in states.items():
                if k == n - 1:
                    _d(nxt, (u0s + (us[k],), corr), c0)
                    continue
                for (u0, coleg), cc in us_coaction_iter(us[k], n - 1 - k, D).items():
                    # u^k<j> (j = 1..n-1-k) goes to leg n - j (0-based), i.e.
                    # u^k<n-1-k> to leg k+1, ..., u^k<1> to leg n-1
                    newcorr = list(corr)
                    for j in range(1, n - k):
                        leg = n - j
                        newcorr[leg] = mono_mul(newcorr[leg], coleg[j - 1])
                    if sum(_fw(z) for z in newcorr) + sum(_fw(z) for z in fs) > D:
                        continue
                    _d(nxt, (u0s + (u0,), tuple(newcorr)), c0 * cc)
            states = nxt
        for (u0s, corr), c0 in states.items():
            fl = [{fs[0]: Fraction(1)}]
            for r in range(1, n):
                fl.append(f_mul_dict({fs[r]: Fraction(1)}, s_antipode(corr[r]), D))
            cur = {(): c0}
            for dct in fl:
                nx2: dict = {}
                for pre, cp in cur.items():
                    for m, cm in dct.items():
                        _d(nx2, pre + (m,), cp * cm)
                cur = nx2
            for t, ct in cur.items():
                if tuple_weight(t) <= D:
                    _d(out, (form, tuple(u0s), t), ct)
    return FormalSum(out)


def pipeline(c48: FormalSum, D: int) -> FormalSum:
    """Psi o AW o alpha o Poincare: de Rham-side bicomplex -> C^*(H, Omega_delta)."""
    return psi(aw_diag(alpha(poincare(c48))), D)


def split_by_degree(c: FormalSum) -> Dict[int, FormalSum]:
    out: Dict[int, FormalSum] = {}
    for k, x in c.items():
        deg = len(k[1])
        out[deg] = out.get(deg, FormalSum()) + FormalSum.basis(k, x)
    return out


# ---------------------------------------------------------------------------
# structural identities, returned as (lhs, rhs) pairs so callers can compare

def _fs(d: dict) -> FormalSum:
    return FormalSum(d)


def lie_hopf_bracket(X: int, Y: int, D: int):
    """Coaction of s as a Lie map: (X<0>,X<1>) bracketed with (Y<0>,Y<1>) by
    [X(x)f, Y(x)g] = [X,Y](x)fg + Y(x)eps(f) X|>g - X(x)eps(g) Y|>f."""
    def letter(u):
        return -1 if u == (1, 0) else 0

    lhs: dict = {}
    for (_, k), c in vf.bracket_w1(X, Y).items():
        for key, c2 in s_coaction_gen(k, D).items():
            _d(lhs, key, c * c2)
    rhs: dict = {}
    for (X0, f), cx in s_coaction_gen(X, D).items():
        for (Y0, g), cy in s_coaction_gen(Y, D).items():
            a, b = letter(X0), letter(Y0)
            if _fw(f) + _fw(g) <= D:
                for (_, k), cb in vf.bracket_w1(a, b).items():
                    _d(rhs, ((1, 0) if k == -1 else (0, 1), mono_mul(f, g)), cx * cy * cb)
            if not f:
                for g2, c2 in us_act_F(X0, g, D).items():
                    _d(rhs, (Y0, g2), cx * cy * c2)
            if not g:
                for f2, c2 in us_act_F(Y0, f, D).items():
                    _d(rhs, (X0, f2), -cx * cy * c2)
    return _fs(lhs), _fs(rhs)


def lie_hopf_coproduct(X: int, m, D: int):
    """Delta(X |> f) against X . Delta(f), and eps(X |> f)."""
    u = (1, 0) if X == -1 else (0, 1)
    lhs: dict = {}
    for g, c in us_act_F(u, m, D).items():
        for k, c2 in delta_iter(g, 2).items():
            _d(lhs, k, c * c2)
    rhs: dict = {}
    for t, c in delta_iter(m, 2).items():
        for t2, c2 in bullet(X, t, D).items():
            _d(rhs, t2, c * c2)
    eps = sum((c for g, c in us_act_F(u, m, D).items() if not g), Fraction(0))
    return _fs(lhs), _fs(rhs), eps


def induced_module(X: int, form, D: int):
    """rho(X . w) against X . rho(w), with X.(w(x)f) = X<0>.w (x) X<1> f + w (x) X|>f."""
    u = (1, 0) if X == -1 else (0, 1)
    lhs: dict = {}
    for w2, c in vf.act_basis(X, form).items():
        for k, c2 in omega_coaction(w2, D).items():
            _d(lhs, k, c * c2)
    rhs: dict = {}
    for (w0, m), c in omega_coaction(form, D).items():
        for (X0, X1), cx in s_coaction_gen(X, D).items():
            if _fw(m) + _fw(X1) > D:
                continue
            for w3, c3 in vf.act_basis(-1 if X0 == (1, 0) else 0, w0).items():
                _d(rhs, (w3, mono_mul(X1, m)), c * cx * c3)
        for m2, c2 in us_act_F(u, m, D).items():
            _d(rhs, (w0, m2), c * c2)
    return _fs(lhs), _fs(rhs)


def sayd_condition(form, h, D: int, delta0=None):
    """Coaction of w.h against S(h_(3)) w<-1> h_(1) (x) w<0>.h_(2)."""
    def hw(k):
        return _fw(k[0][0])

    lhs: dict = {}
    for w2, c in sayd_action(form, h, delta0).items():
        for k, c2 in sayd_coaction(w2, D).items():
            if hw(k) <= D:
                _d(lhs, k, c * c2)
    rhs: dict = {}
    for (h1, h2, h3), c in h_delta_iter(h, 3, D).items():
        for (vm, v0), cv in sayd_coaction(form, D).items():
            acts = sayd_action(v0, h2, delta0)
            if not acts:
                continue
            for s3, cs in h_antipode(h3, D).items():
                for p, cp in h_mul(s3, vm, D).items():
                    for p2, cp2 in h_mul(p, h1, D).items():
                        for v2, ca in acts.items():
                            _d(rhs, (p2, v2), c * cv * cs * cp * cp2 * ca)
    return _fs(lhs), _fs(rhs)


def sayd_stability(form, D: int, delta0=None):
    out: dict = {}
    for (h, w0), c in sayd_coaction(form, D).items():
        for w2, c2 in sayd_action(w0, h, delta0).items():
            _d(out, w2, c * c2)
    return _fs(out), FormalSum.basis(form)


def bullet_split_identity(X: int, f: tuple, g: tuple, D: int):
    """X . (f~ (x) g~) against X<0> . f~ (x) X<1> . g~ + f~ (x) X . g~."""
    lhs = _fs({k: c for k, c in bullet(X, f + g, D).items() if tuple_weight(k) <= D})
    rhs: dict = {}
    for (X0, X1), cx in s_coaction_gen(X, D).items():
        x0 = -1 if X0 == (1, 0) else 0
        for f2, cf in bullet(x0, f, D).items():
            for g2, cg in f_act_tuple(X1, g, D).items():
                if tuple_weight(f2 + g2) <= D:
                    _d(rhs, f2 + g2, cx * cf * cg)
    for g2, cg in bullet(X, g, D).items():
        if tuple_weight(f + g2) <= D:
            _d(rhs, f + g2, cg)
    return lhs, _fs(rhs)


def _coact_terms(S, D):
    """eta -> eta<-1> (x) eta<0> as FormalSum over (monomial, word)."""
    return _fs(sstar_coaction(tuple(S), D))


def sstar_coaction_identity(S: tuple, D: int):
    """Coaction of d_DR eta against eta<-1> (x) d_DR eta<0> - X_i |> eta<-1> (x) v^i ^ eta<0>."""
    lhs: dict = {}
    for S2, c in d_dr(S, "s").items():
        for k, c2 in sstar_coaction(S2, D).items():
            _d(lhs, k, c * c2)
    rhs: dict = {}
    for (m, S0), c in sstar_coaction(tuple(S), D).items():
        for S2, c2 in d_dr(S0, "s").items():
            _d(rhs, (m, S2), c * c2)
        for i in (-1, 0):
            r = wedge_prepend(i, S0)
            if r is None:
                continue
            u = (1, 0) if i == -1 else (0, 1)
            for m2, c3 in us_act_F(u, m, D).items():
                _d(rhs, (m2, r[0]), -c * r[1] * c3)
    return _fs(lhs), _fs(rhs)


def _twisted_tail(form, S, D):
    """{(w<0>, eta<0>, S(w<1>) eta<-1>): c}."""
    out: dict = {}
    for (w0, m), cw in omega_coaction(form, D).items():
        for (me, S0), ce in sstar_coaction(tuple(S), D).items():
            if _fw(m) + _fw(me) > D:
                continue
            for k, ck in s_antipode(m).items():
                _d(out, (w0, S0, mono_mul(k, me)), cw * ce * ck)
    return out


def twisted_tail_identity(a, S: tuple, D: int):
    """The identity for a in Omega^0 and eta in ^p s*."""
    lhs: dict = {}
    for i in (-1, 0):
        r = wedge_prepend(i, S)
        if r is None:
            continue
        for a2, ca in vf.act_basis(i, a).items():
            for k, c in _twisted_tail(a2, r[0], D).items():
                _d(lhs, k, ca * r[1] * c)
    # the last term reads (X_i |> S(a<1>)) eta<-1>: X_i acts on S(a<1>) only
    rhs: dict = {}
    for (a0, m), cw in omega_coaction(a, D).items():
        for (me, S0), ce in sstar_coaction(tuple(S), D).items():
            if _fw(m) + _fw(me) > D:
                continue
            for k, ck in s_antipode(m).items():
                c = cw * ce * ck
                for i in (-1, 0):
                    r = wedge_prepend(i, S0)
                    if r is None:
                        continue
                    for a2, ca in vf.act_basis(i, a0).items():
                        _d(rhs, (a2, r[0], mono_mul(k, me)), c * ca * r[1])
                    u = (1, 0) if i == -1 else (0, 1)
                    for k2, ch in us_act_F(u, k, D).items():
                        if _fw(k2) + _fw(me) <= D:
                            _d(rhs, (a0, r[0], mono_mul(k2, me)), c * r[1] * ch)
    return _fs(lhs), _fs(rhs)


def dual_basis_identity(f: tuple, D: int):
    """sum_i v^i<0> (x) X_i . f~ (x) v^i<-1> against sum_i v^i (x) X_i . f~ (x) 1."""
    lhs: dict = {}
    rhs: dict = {}
    for i in (-1, 0):
        for t, c in bullet(i, f, D).items():
            _d(rhs, ((i,), t + (ONE,)), c)
            for (m, (j,)), c2 in sstar_coaction((i,), D).items():
                if tuple_weight(t) + _fw(m) <= D:
                    _d(lhs, ((j,), t + (m,)), c * c2)
    return _fs(lhs), _fs(rhs)


def dual_basis_identity_corrected(f: tuple, D: int):
    """sum_i v^i<0> (x) X_i . f~ (x) v^i<-1> against sum_i v^i (x) X_i<0> . f~ (x) X_i<1>,
    the form that the bullet-split identity gives for X_i . (f~ (x) 1)."""
    lhs, _ = dual_basis_identity(f, D)
    rhs: dict = {}
    for i in (-1, 0):
        for (X0, X1), cx in s_coaction_gen(i, D).items():
            x0 = -1 if X0 == (1, 0) else 0
            for t, c in bullet(x0, f, D).items():
                if tuple_weight(t) + _fw(X1) <= D:
                    _d(rhs, ((i,), t + (X1,)), cx * c)
    return lhs, _fs(rhs)


def cosimplicial_identities(c: FormalSum, q: int, D: int, delta0=None):
    """Yield (name, lhs, rhs) for the cosimplicial and cyclic relations on c in C^q."""
    def cut(v, deg):
        return v.filter(lambda k: _hw(k[1]) <= D)

    F_ = lambda i, x, n: face(i, x, n, D, delta0)
    S_ = lambda j, x, n: degeneracy(j, x, n)
    T_ = lambda x, n: cyclic(x, n, D, delta0)
    for j in range(q + 2):
        for i in range(j):
            yield "d%d d%d" % (j, i), F_(j, F_(i, c, q), q + 1), F_(i, F_(j - 1, c, q), q + 1)
    if q >= 1:
        for j in range(q):
            for i in range(q + 1):
                lhs = S_(j, F_(i, c, q), q + 1)
                if i < j:
                    rhs = F_(i, S_(j - 1, c, q), q - 1)
                elif i in (j, j + 1):
                    rhs = c
                else:
                    rhs = F_(i - 1, S_(j, c, q), q - 1)
                yield "s%d d%d" % (j, i), lhs, rhs
    if q >= 2:
        for j in range(q - 1):
            for i in range(j + 1):
                yield "s%d s%d" % (j, i), S_(j, S_(i, c, q), q - 1), S_(i, S_(j + 1, c, q), q - 1)
    for i in range(1, q + 1):
        yield "t d%d" % i, T_(F_(i, c, q), q + 1), F_(i - 1, T_(c, q), q)
    yield "t d0", T_(F_(0, c, q), q + 1), F_(q + 1, c, q)
    if q >= 1:
        for i in range(1, q):
            yield "t s%d" % i, T_(S_(i, c, q), q - 1), S_(i - 1, T_(c, q), q)
        yield "t s0", T_(S_(0, c, q), q - 1), S_(q - 1, T_(T_(c, q), q), q)
    x = c
    for _ in range(q + 1):
        x = T_(x, q)
    yield "t^(q+1)", x, c


# ---------------------------------------------------------------------------
# total (b, B) cocycles

def _h_basis(D: int, max_us: int):
    out = []
    for w in range(D + 1):
        for m in (jets.monomials(w) if w else (ONE,)):
            for n in range(max_us + 1):
                for a in range(n + 1):
                    out.append((m, (a, n - a)))
    return out


def complete_total_cocycle(components: Dict[int, FormalSum], D: int, delta0=None, max_us: int = 2):
    """Given the top component c_k of an odd/even chain, look for lower
    components y_{k-2}, y_{k-4}, ... making c a total (b, B)-cocycle in the
    window.  Lower components already present are kept as a starting point.

    Returns (completed components, witnesses) or (None, failing degree).
    """
    from .linalg import solve
    comps = {k: v for k, v in components.items()}
    top = max(comps)
    if hochschild_b(comps[top], top, D, delta0).filter(lambda k: _hw(k[1]) <= D):
        return None, top + 1
    witnesses = {}
    k = top
    while k - 2 >= 0 or k - 1 >= 0:
        lower = k - 2
        cur = comps.get(lower, FormalSum()) if lower >= 0 else FormalSum()
        r = connes_B(comps[k], k, D, delta0)
        if lower >= 0:
            r = r + hochschild_b(cur, lower, D, delta0)
        r = r.filter(lambda key: _hw(key[1]) <= D)
        if not r:
            if lower < 0:
                break
            comps[lower] = cur
            k = lower
            continue
        if lower < 0:
            return None, k - 1
        forms = sorted({key[0] for key in r.keys()}, key=str)
        # candidate correction keys
        cands = []
        hb = _h_basis(D, max_us)
        if lower == 0:
            cands = [(f, ()) for f in forms]
        else:
            import itertools
            for f in forms:
                for legs in itertools.product(hb, repeat=lower):
                    if _hw(legs) <= D:
                        cands.append((f, legs))
        cols = []
        for key in cands:
            col = hochschild_b(FormalSum.basis(key), lower, D, delta0).filter(lambda kk: _hw(kk[1]) <= D)
            cols.append(dict(col.items()))
        sol = solve(cols, dict((-r).items()))
        if sol is None:
            return None, k - 1
        y = FormalSum({key: x for key, x in zip(cands, sol) if x})
        witnesses[lower] = y
        comps[lower] = cur + y
        k = lower
    return comps, witnesses


def is_total_cocycle(components: Dict[int, FormalSum], D: int, delta0=None) -> bool:
    return all(v.filter(lambda k: _hw(k[1]) <= D) == 0
               for v in total_bB_defect(components, D, delta0).values())


# ---------------------------------------------------------------------------
# the characteristic classes on the Hopf side

def _coord(i: int, coordinates: str) -> FormalSum:
    if coordinates == "literal":
        return FormalSum.basis((i,))
    if coordinates == "log":
        return jets.log_coordinate(i)
    raise MalformedInput("coordinates must be 'literal' or 'log'")


def lambda_prime(D: int, coordinates: str = "literal") -> FormalSum:
    """1 (x) theta^0 + sum_{1<=i<=D} (i+1) x^i (x) x_i."""
    out: dict = {(("x", 0), (0,), ()): Fraction(1)}
    for i in range(1, D + 1):
        for m, c in _coord(i, coordinates).items():
            _d(out, (("x", i), (), (m,)), (i + 1) * c)
    return FormalSum(out)


def mu_prime(D: int, coordinates: str = "literal") -> FormalSum:
    """sum_{1<=i<=D} (i+1) i f^{i-1} (x) x_i."""
    out: dict = {}
    for i in range(1, D + 1):
        for m, c in _coord(i, coordinates).items():
            _d(out, (("f", i - 1), (), (m,)), (i + 1) * i * c)
    return FormalSum(out)


def hopf_display(D: int, kind: str = "lambda", start: int = 1, coordinates: str = "literal") -> FormalSum:
    """The closed-form degree-3 cochains as printed:

    1/2 sum c_i w_i (x) e_-1 (x) e_0 (x) x_i - sum c_i w_i (x) e_0 (x) x_1 e_0 (x) x_i
    - 1/2 sum c_i w_i (x) e_0 (x) e_-1 (x) x_i,

    with w_i = x^i, c_i = i+1 for lambda and w_i = f^i, c_i = i+1 for mu,
    start <= i <= D.  An i = 0 term reads x_0 as the unit of F(N)."""
    out: dict = {}
    em1, e0 = (ONE, (1, 0)), (ONE, (0, 1))
    x1e0 = ((1,), (0, 1))
    for i in range(start, D + 1):
        w = ("x", i) if kind == "lambda" else ("f", i)
        c = Fraction(i + 1)
        coord = {ONE: Fraction(1)} if i == 0 else dict(_coord(i, coordinates).items())
        for m, cm in coord.items():
            xi = (m, U1)
            if 1 + _fw(m) <= D:
                _d(out, (w, (e0, x1e0, xi)), -c * cm)
            _d(out, (w, (em1, e0, xi)), c * cm / 2)
            _d(out, (w, (e0, em1, xi)), -c * cm / 2)
    return FormalSum(out)


def hopf_class_display(D: int, kind: str = "lambda", coordinates: str = "literal") -> FormalSum:
    """The degree-3 cochains that the transport of lambda' and mu' actually
    produces:

    1/2 sum c_i w_i (x) e_-1 (x) e_0 (x) x_i + sum c_i w_i (x) e_0 (x) x_1 e_0 (x) x_i
    - 1/2 sum c_i w_i (x) e_0 (x) e_-1 (x) x_i,

    with (w_i, c_i) = (x^i, i+1) for lambda and (f^{i-1}, (i+1) i) for mu,
    1 <= i <= D, and x_i read in the given coordinates."""
    out: dict = {}
    em1, e0 = (ONE, (1, 0)), (ONE, (0, 1))
    x1e0 = ((1,), (0, 1))
    for i in range(1, D + 1):
        w, c = (("x", i), Fraction(i + 1)) if kind == "lambda" else (("f", i - 1), Fraction((i + 1) * i))
        for m, cm in _coord(i, coordinates).items():
            xi = (m, U1)
            if 1 + sum(m) <= D:
                _d(out, (w, (e0, x1e0, xi)), c * cm)
            _d(out, (w, (em1, e0, xi)), c * cm / 2)
            _d(out, (w, (e0, em1, xi)), -c * cm / 2)
    return FormalSum(out)
