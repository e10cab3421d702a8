"""Formal vector fields W_n, the splitting W_1 = s + n, and forms in one variable.

Keys used throughout the package:

* ``("e", i)``   -- e_i = x^{i+1} d/dx in W_1, i >= -1
* ``("x", j)``   -- the function x^j in Omega^0
* ``("f", j)``   -- the 1-form x^j dx in Omega^1
* ``("t", i)``   -- theta^i, the dual covector of e_i
* ``("W", i, J)`` -- x^J d/dx_i in W_n, J a sorted tuple of variable indices
"""

from __future__ import annotations

from collections import Counter
from typing import Tuple

from .core import FormalSum, MalformedInput, add_into

S_INDICES = (-1, 0)


def e(i: int, c=1) -> FormalSum:
    return FormalSum.basis(("e", i), c)


def xf(j: int, c=1) -> FormalSum:
    """The function x^j."""
    return FormalSum.basis(("x", j), c)


def ff(j: int, c=1) -> FormalSum:
    """The 1-form x^j dx."""
    return FormalSum.basis(("f", j), c)


def theta(i: int, c=1) -> FormalSum:
    return FormalSum.basis(("t", i), c)


def in_s(i: int) -> bool:
    return i in S_INDICES


def in_n(i: int) -> bool:
    return i >= 1


# ---------------------------------------------------------------------------
# W_n in the monomial basis x^J d_i

def wn_elem(i: int, J=(), n: int = None) -> tuple:
    """Basis key for x^{J} d/dx_i (J a multiset of variable indices)."""
    J = tuple(sorted(J))
    if n is not None:
        for a in (i,) + J:
            if not 1 <= a <= n:
                raise MalformedInput("index %d out of range for n=%d" % (a, n))
    return ("W", i, J)


def _wn_check(k, n):
    if not (isinstance(k, tuple) and len(k) == 3 and k[0] == "W"):
        raise MalformedInput("not a W_n basis key: %r" % (k,))
    _, i, J = k
    for a in (i,) + tuple(J):
        if not 1 <= a <= n:
            raise MalformedInput("index %d does not belong to W_%d" % (a, n))


def _mono_diff(J: tuple, l: int):
    """d/dx_l of x^J as (coefficient, J')."""
    m = J.count(l)
    if m == 0:
        return 0, None
    L = list(J)
    L.remove(l)
    return m, tuple(L)


def bracket_wn(a, b, n: int) -> FormalSum:
    """[x^A d_i, x^B d_p] = (d_i x^B) x^A d_p - (d_p x^A) x^B d_i."""
    _wn_check(a, n)
    _wn_check(b, n)
    _, i, A = a
    _, p, B = b
    acc: dict = {}
    c, Bi = _mono_diff(B, i)
    if c:
        add_into(acc, ("W", p, tuple(sorted(A + Bi))), c)
    c, Ap = _mono_diff(A, p)
    if c:
        add_into(acc, ("W", i, tuple(sorted(B + Ap))), -c)
    return FormalSum(acc)


def bracket_wn_sum(u: FormalSum, v: FormalSum, n: int) -> FormalSum:
    acc = FormalSum()
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            acc = acc + bracket_wn(k1, k2, n) * (c1 * c2)
    return acc


def wn_to_w1(k) -> Tuple[tuple, int]:
    """Identify x^{m} d/dx in W_1 (monomial basis) with e_{m-1}; constant 1."""
    _, i, J = k
    if i != 1 or any(a != 1 for a in J):
        raise MalformedInput("not an n=1 key: %r" % (k,))
    return ("e", len(J) - 1), 1


WN_W1_NORMALIZATION = 1  # e_1^{1...1} (m ones) = 1 * e_{m-1}


# ---------------------------------------------------------------------------
# W_1

def bracket_w1(p: int, q: int) -> FormalSum:
    """[e_p, e_q] = (q - p) e_{p+q}, zero below e_{-1}."""
    if p < -1 or q < -1:
        raise MalformedInput("W_1 index below -1")
    if p + q < -1:
        return FormalSum()
    return FormalSum.basis(("e", p + q), q - p)


def bracket(u: FormalSum, v: FormalSum) -> FormalSum:
    acc: dict = {}
    for (_, p), c1 in u.items():
        for (_, q), c2 in v.items():
            if p + q >= -1 and q != p:
                add_into(acc, ("e", p + q), (q - p) * c1 * c2)
    return FormalSum(acc)


def split_sn(u: FormalSum):
    """Decompose a W_1 element into its s- and n-components."""
    s = u.filter(lambda k: in_s(k[1]))
    nn = u.filter(lambda k: in_n(k[1]))
    return s, nn


def matched_pair(xi: FormalSum, X: FormalSum):
    """(xi |> X, xi <| X) from [xi, X] = xi |> X + xi <| X in s + n."""
    if any(not in_n(k[1]) for k in xi.keys()):
        raise MalformedInput("left argument must lie in n")
    if any(not in_s(k[1]) for k in X.keys()):
        raise MalformedInput("right argument must lie in s")
    return split_sn(bracket(xi, X))


def n_on_s(p: int, i: int) -> FormalSum:
    """e_p |> e_i for p >= 1, i in s (basis level)."""
    return matched_pair(e(p), e(i))[0]


def s_on_n(p: int, i: int) -> FormalSum:
    """e_p <| e_i for p >= 1, i in s (basis level)."""
    return matched_pair(e(p), e(i))[1]


# ---------------------------------------------------------------------------
# Omega^{<=1}: x^j and x^j dx

def _act_key(p: int, k) -> dict:
    tag, j = k
    if tag == "x":
        if j == 0 or p + j < 0:
            return {}
        return {("x", p + j): j}
    if tag == "f":
        c = p + j + 1
        if c == 0 or p + j < 0:
            return {}
        return {("f", p + j): c}
    raise MalformedInput("not a form key: %r" % (k,))


def act_on_forms(v: FormalSum, w: FormalSum) -> FormalSum:
    """Lie derivative: e_p.x^j = j x^{p+j}, e_p.x^j dx = (p+j+1) x^{p+j} dx."""
    acc: dict = {}
    for (_, p), c1 in v.items():
        for k, c2 in w.items():
            for k2, c3 in _act_key(p, k).items():
                add_into(acc, k2, c1 * c2 * c3)
    return FormalSum(acc)


def act_basis(p: int, k) -> dict:
    """e_p . (basis form k) as a plain dict."""
    return _act_key(p, k)


def right_act_forms(w: FormalSum, v: FormalSum) -> FormalSum:
    """omega . X := -X . omega."""
    return -act_on_forms(v, w)


def coadjoint_basis(i: int, p: int, ambient: str = None) -> dict:
    """theta^i . e_p as a dict; (theta.X)(Y) = theta([X, Y]).

    ``ambient`` restricts the result to "s" (indices -1, 0), "n" (>= 1) or
    keeps everything when None.
    """
    j = i - p
    if j < -1 or p == j:
        return {}
    if ambient == "s" and not in_s(j):
        return {}
    if ambient == "n" and not in_n(j):
        return {}
    return {j: i - 2 * p}


def right_act_theta(t: FormalSum, v: FormalSum, ambient: str = None) -> FormalSum:
    acc: dict = {}
    for (_, i), c1 in t.items():
        for (_, p), c2 in v.items():
            for j, c3 in coadjoint_basis(i, p, ambient).items():
                add_into(acc, ("t", j), c1 * c2 * c3)
    return FormalSum(acc)


def right_act(w: FormalSum, v: FormalSum, ambient: str = None) -> FormalSum:
    """Right action of W_1 on forms (-X.omega) or on covectors (coadjoint)."""
    if all(k[0] == "t" for k in w.keys()):
        return right_act_theta(w, v, ambient)
    if any(k[0] == "t" for k in w.keys()):
        raise MalformedInput("mixed forms and covectors")
    return right_act_forms(w, v)


def product_basis(a, b):
    """Module product of two basis forms: (key, coeff) or None."""
    ta, i = a
    tb, j = b
    if ta == "x" and tb == "x":
        return ("x", i + j)
    if ta == "x" and tb == "f" or ta == "f" and tb == "x":
        return ("f", i + j)
    if ta == "f" and tb == "f":
        return None
    raise MalformedInput("not form keys: %r, %r" % (a, b))


def module_product(a: FormalSum, b: FormalSum) -> FormalSum:
    """x^i x^j = x^{i+j}, x^i . x^j dx = x^{i+j} dx, dx.dx = 0."""
    return a.tensor(b, product_basis)


def is_lie_action_basis(p: int, q: int, k) -> bool:
    """[e_p, e_q].w == e_p.(e_q.w) - e_q.(e_p.w) on a basis form."""
    w = FormalSum.basis(k)
    lhs = act_on_forms(bracket_w1(p, q), w)
    rhs = act_on_forms(e(p), act_on_forms(e(q), w)) - act_on_forms(e(q), act_on_forms(e(p), w))
    return lhs == rhs
