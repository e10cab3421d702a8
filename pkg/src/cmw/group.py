"""Polynomial group cohomology of N = {x + O(x^2)} with coefficients in
Omega^{<=1} (x) ^p s*, its two coboundaries, and the comparison maps with the
Hopf bicomplex.

Representation
--------------
A cochain is stored in inhomogeneous form as a FormalSum over the same keys
as the Hopf bicomplex, ``(form, S, (m1, ..., mq))``: the monomial m_k is
evaluated on the k-th argument, so

    phi(psi_1, ..., psi_q) = sum c * form (x) theta^S * m1(psi_1) ... mq(psi_q).

Values are FormalSums over ``(form, S)``.  The homogeneous form is derived on
demand.  The group law is composition, (psi1 psi2)(x) = psi1(psi2(x)), and N
acts on the right: (w . psi)(x) = w(psi(x)) (times psi'(x) for 1-forms), and
eta . psi = eta<-1>(psi) eta<0> on s*.

Grading: form-weight - F-weight - (weight of S) is preserved by every map
here, so a cochain of grading g evaluated on jets of order k is exact up to
form-weight g + k; evaluations are compared after cutting at a form-weight cap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from .core import FormalSum, IntegrityError, MalformedInput, add_into
from . import jets
from . import hopf
from . import vector_fields as vf
from .jets import ONE, Jet, mono_mul
from .lie import d_dr, wedge_prepend
from .hopf import delta_iter, s_antipode, tuple_weight, omega_coaction, sstar_coaction


def form_weight(form) -> int:
    fam, j = form
    return j if fam == "x" else j + 1


def arity(c: FormalSum) -> int:
    qs = {len(k[2]) for k in c}
    if len(qs) > 1:
        raise MalformedInput("mixed arities %r" % sorted(qs))
    return qs.pop() if qs else 0


def _cut(v: FormalSum, cap: int) -> FormalSum:
    return v.filter(lambda k: form_weight(k[0]) <= cap)


# ---------------------------------------------------------------------------
# the group and its actions

def gmul(*psis: Jet) -> Jet:
    out = psis[0]
    for p in psis[1:]:
        out = jets.compose(out, p)
    return out


def group_act(w: FormalSum, psi: Jet, cap: int = None) -> FormalSum:
    """Right action by substitution: x^j -> psi(x)^j, f^j -> psi(x)^j psi'(x) dx.

    Terms of form-weight > cap (default: weight of w plus the jet order) are
    dropped; below the cap the result is exact."""
    out: dict = {}
    n = psi.order + 1
    s = psi.series()
    ds = psi.derivative()
    for form, c in w.items():
        fam, j = form
        top = form_weight(form) + psi.order if cap is None else cap
        pw = [Fraction(1)] + [Fraction(0)] * n
        for _ in range(j):
            pw = jets.s_mul(pw, s, n)
        if fam == "f":
            pw = jets.s_mul(pw, ds + [Fraction(0)] * (n + 1 - len(ds)), n)
        for d, a in enumerate(pw):
            if a and d <= n:
                key = ("x", d) if fam == "x" else ("f", d)
                if form_weight(key) <= top:
                    add_into(out, key, c * a)
    return FormalSum(out)


def sstar_act(S: tuple, psi: Jet) -> FormalSum:
    """theta^S . psi = eta<-1>(psi) eta<0>, as {S': c}."""
    out: dict = {}
    for (m, S2), c in sstar_coaction(S, psi.order).items():
        add_into(out, S2, c * jets.evaluate(FormalSum.basis(m), psi))
    return FormalSum(out)


def value_act(val: FormalSum, psi: Jet, cap: int) -> FormalSum:
    """Right action of N on Omega (x) ^p s* values."""
    out = FormalSum()
    for (form, S), c in val.items():
        wf = group_act(FormalSum.basis(form), psi, cap)
        ws = sstar_act(S, psi)
        out = out + wf.tensor(ws, lambda a, b: (a, b)) * c
    return _cut(out, cap)


# ---------------------------------------------------------------------------
# evaluation

def evaluate(c: FormalSum, psis: Sequence[Jet], cap: int = None) -> FormalSum:
    """Inhomogeneous value phi(psi_1, ..., psi_q)."""
    out: dict = {}
    for (form, S, t), x in c.items():
        if len(t) != len(psis):
            raise MalformedInput("cochain of arity %d evaluated on %d jets" % (len(t), len(psis)))
        v = x
        for m, psi in zip(t, psis):
            for i in m:
                v *= psi[i]
            if not v:
                break
        if v:
            add_into(out, (form, S), v)
    res = FormalSum(out)
    return _cut(res, cap) if cap is not None else res


def homogeneous(c: FormalSum, psis: Sequence[Jet], cap: int) -> FormalSum:
    """phi(psi_0, ..., psi_q) = phibar(psi_0 psi_1^-1, ..., psi_{q-1} psi_q^-1) . psi_q."""
    q = len(psis) - 1
    args = [jets.compose(psis[i], jets.invert(psis[i + 1])) for i in range(q)]
    return value_act(evaluate(c, args, cap), psis[q], cap)


def inhomogeneous_from(hom, psis: Sequence[Jet]):
    """phibar(psi_1..psi_q) = phi(psi_1...psi_q, ..., psi_q, e) for a callable phi."""
    q = len(psis)
    order = psis[0].order if psis else 1
    args = [gmul(*psis[i:]) for i in range(q)] + [Jet.identity(order)]
    return hom(args)


# ---------------------------------------------------------------------------
# b_N

def bN_group(c: FormalSum, D: int) -> FormalSum:
    """Inhomogeneous coboundary

    phibar(psi_2..) + sum_i (-1)^i phibar(.., psi_i psi_{i+1}, ..) + (-1)^{q+1} phibar(psi_1..psi_q) . psi_{q+1},

    symbolically: psi_i psi_{i+1} is the coproduct of the slot monomial and
    the action on the value is w<0> S(w<1>)(psi) (x) eta<-1>(psi) eta<0>."""
    return hopf.bN_star(c, D)


def bN_group_eval(c: FormalSum, psis: Sequence[Jet], cap: int) -> FormalSum:
    """The inhomogeneous formula evaluated directly on q+1 jets."""
    q = len(psis) - 1
    out = evaluate(c, psis[1:], cap)
    for i in range(q):
        args = list(psis[:i]) + [jets.compose(psis[i], psis[i + 1])] + list(psis[i + 2:])
        out = out + evaluate(c, args, cap) * (-1 if (i + 1) % 2 else 1)
    last = value_act(evaluate(c, psis[:q], cap), psis[q], cap)
    return _cut(out + last * (-1 if (q + 1) % 2 else 1), cap)


def bN_homogeneous_eval(c: FormalSum, psis: Sequence[Jet], cap: int) -> FormalSum:
    """sum_i (-1)^i phi(psi_0, .., psi_i^, .., psi_{q+1}) on the homogeneous form."""
    out = FormalSum()
    for i in range(len(psis)):
        rest = list(psis[:i]) + list(psis[i + 1:])
        out = out + homogeneous(c, rest, cap) * (-1 if i % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# b_s

def flow_velocity(psi: Jet, X: int) -> List[Fraction]:
    """d/dt x_i(psi <| exp(t e_X)) at t = 0 for i = 1..order (index 0 unused).

    e_-1: (psi(x+t) - psi(t)) / psi'(t)  ->  psi'(x) - 1 - psi''(0) psi(x)
    e_0:  psi(e^t x) e^{-t}               ->  x psi'(x) - psi(x)"""
    s = psi.series()
    n = psi.order + 1
    ds = psi.derivative() + [Fraction(0)] * 2
    if X == -1:
        ser = [ds[d] - (1 if d == 0 else 0) - 2 * psi[1] * s[d] for d in range(n + 1)]
    elif X == 0:
        ser = [(ds[d - 1] if d else 0) - s[d] for d in range(n + 1)]
    else:
        raise MalformedInput("s is spanned by e_-1 and e_0")
    return [Fraction(0)] + [Fraction(ser[i + 1]) for i in range(1, psi.order + 1)]


def _theta_wedge(X: int, v: dict, out: dict, sign) -> None:
    for (form, S, t), x in v.items():
        r = wedge_prepend(X, S)
        if r is not None:
            add_into(out, (form, r[0], t), sign * r[1] * x)


def _psi_on_s(X: int, D: int) -> Dict[tuple, Fraction]:
    """psi |> e_X = sum Y * m(psi) as {(Y, m): c}: e_-1 -> e_-1 + psi''(0) e_0, e_0 -> e_0
    (from psi o exp(tX) = (psi |> exp(tX)) o (psi <| exp(tX)))."""
    out: dict = {}
    for (u, m), c in hopf.s_coaction_gen(X, D).items():
        add_into(out, (-1 if u == (1, 0) else 0, m), c)
    return out


def flow_act(X: int, c: FormalSum, D: int) -> FormalSum:
    """(X |> phi) with the flow acting on every argument of the homogeneous form.

    In inhomogeneous slots, psi_j is differentiated along P |> X with
    P = psi_{j+1} ... psi_q, and the polynomial coefficient of P |> X is
    spread over the later slots by the coproduct."""
    out: dict = {}
    for (form, S, t), x in c.items():
        for j, m in enumerate(t):
            rest = t[j + 1:]
            for (Y, mc), cy in _psi_on_s(X, D).items():
                if rest:
                    spread = hopf.f_act_tuple(mc, rest, D)
                elif mc:
                    continue
                else:
                    spread = {(): Fraction(1)}
                for m2, cm in jets.s_action_on_F(Y, FormalSum.basis(m), "flow").items():
                    for r2, cr in spread.items():
                        add_into(out, (form, S, t[:j] + (m2,) + r2), x * cy * cm * cr)
    return FormalSum(out)


def _dmax(c: FormalSum) -> int:
    return max([tuple_weight(k[2]) for k in c] + [1]) + 1


def bs_group(c: FormalSum, D: int = None) -> FormalSum:
    """b_s(phi) = d_CE^Omega(phi) - sum_j theta^j ^ (e_j |> phi), where
    d_CE^Omega(w (x) eta) = sum_j L_{e_j} w (x) theta^j ^ eta + w (x) d eta.

    L is a representation of the vector-field bracket and so is minus the flow
    derivative, hence b_s^2 = 0 with d eta taken for that bracket."""
    out: dict = {}
    for (form, S, t), x in c.items():
        # Chevalley-Eilenberg differential of s with the vector-field
        # bracket: d theta^-1 = -theta^-1 ^ theta^0 (the opposite of d_dr)
        for S2, cd in d_dr(S, "s").items():
            add_into(out, (form, S2, t), -x * cd)
        for j in (-1, 0):
            r = wedge_prepend(j, S)
            if r is None:
                continue
            for f2, cf in vf.act_basis(j, form).items():
                add_into(out, (f2, r[0], t), x * r[1] * cf)
    acc = FormalSum(out)
    for j in (-1, 0):
        extra: dict = {}
        _theta_wedge(j, dict(flow_act(j, c, D if D is not None else _dmax(c)).items()), extra, -1)
        acc = acc + FormalSum(extra)
    if D is not None:
        acc = acc.filter(lambda k: tuple_weight(k[2]) <= D)
    return acc


def _poly_directional(m, psi: Jet, vel: List[Fraction]) -> Fraction:
    total = Fraction(0)
    for pos in range(len(m)):
        v = vel[m[pos]]
        for k, i in enumerate(m):
            if k != pos:
                v *= psi[i]
        total += v
    return total


def bs_group_eval(c: FormalSum, psis: Sequence[Jet], cap: int) -> FormalSum:
    """b_s(phi)(psi_1..psi_q) with the flow derivative taken from closed-form
    velocities on actual jets: slot j moves along P |> X, P = psi_{j+1}...psi_q,
    with psi |> e_-1 = e_-1 + psi''(0) e_0 and psi |> e_0 = e_0."""
    q = len(psis)
    base: dict = {}
    for (form, S, t), x in c.items():
        v = x
        for m, psi in zip(t, psis):
            v *= jets.evaluate(FormalSum.basis(m), psi)
        if v:
            add_into(base, (form, S, ()), v)
    out = evaluate(bs_group(FormalSum(base)), (), None)
    vels = []
    for j in range(q):
        v0 = flow_velocity(psis[j], 0)
        if j + 1 < q:
            P = gmul(*psis[j + 1:])
            pp = 2 * P[1]
        else:
            pp = Fraction(0)
        vm1 = [a + pp * b for a, b in zip(flow_velocity(psis[j], -1), v0)]
        vels.append({-1: vm1, 0: v0})
    extra: dict = {}
    for (form, S, t), x in c.items():
        vals = [jets.evaluate(FormalSum.basis(m), p) for m, p in zip(t, psis)]
        for X in (-1, 0):
            r = wedge_prepend(X, S)
            if r is None:
                continue
            d = Fraction(0)
            for j, m in enumerate(t):
                term = _poly_directional(m, psis[j], vels[j][X])
                for k2, val in enumerate(vals):
                    if k2 != j:
                        term *= val
                d += term
            if d:
                add_into(extra, (form, r[0]), -x * r[1] * d)
    return _cut(out + FormalSum(extra), cap)


def total_group(c: FormalSum, D: int) -> FormalSum:
    """b_s - (-1)^p bN_group: the transport of -D_tot of the Hopf bicomplex."""
    out = bs_group(c, D)
    for p in (0, 1, 2):
        part = c.filter(lambda k, p=p: len(k[1]) == p)
        if part:
            out = out - bN_group(part, D) * (-1 if p % 2 else 1)
    return out


# ---------------------------------------------------------------------------
# the isomorphisms I and J

def _split(m, k: int) -> Dict[tuple, Fraction]:
    return delta_iter(m, k)


def iso_I(c: FormalSum, D: int) -> FormalSum:
    """v (x) eta (x) f^1..f^q  ->
    v<0> (x) eta<0> (x) f^1(1) (x) S(f^1(2)) f^2(1) (x) ... (x) S(v<1> eta<1> f^q(2)),
    with eta<1> = S(eta<-1>) so the last leg is S(v<1>) eta<-1> S(f^q(2))."""
    out: dict = {}
    for (form, S, t), x in c.items():
        q = len(t)
        # legs[0..q]: partial products, built left to right
        partial = {((), ONE): Fraction(1)}  # (finished legs, pending factor for next leg)
        for k in range(q):
            nxt: dict = {}
            for (legs, pend), cp in partial.items():
                for (a, b), cc in _split(t[k], 2).items():
                    for sb, cs in s_antipode(b).items():
                        leg = mono_mul(pend, a)
                        add_into(nxt, (legs + (leg,), sb), cp * cc * cs)
            partial = nxt
        for (legs, pend), cp in partial.items():
            if tuple_weight(legs) + sum(pend) > D:
                continue
            for (w0, mw), cw in omega_coaction(form, D).items():
                for smw, cs in s_antipode(mw).items():
                    for (me, S2), ce in sstar_coaction(S, D).items():
                        last = mono_mul(mono_mul(pend, smw), me)
                        nt = legs + (last,)
                        if tuple_weight(nt) <= D:
                            add_into(out, (w0, S2, nt), x * cp * cw * cs * ce)
    return FormalSum(out)


def iso_I_inv(c: FormalSum, D: int) -> FormalSum:
    """v (x) eta (x) f^0..f^q -> v (x) eta (x) f^0(1) (x) f^0(2) f^1(1) (x) ...
    (x) f^0(q) ... f^{q-1}(1) * eps(f^q)."""
    out: dict = {}
    for (form, S, t), x in c.items():
        q = len(t) - 1
        if q < 0:
            raise MalformedInput("coinvariant elements have at least one F-leg")
        if t[q]:
            continue
        cur = {tuple([ONE] * q): Fraction(1)}
        for j in range(q):
            nxt: dict = {}
            for legs, cl in cur.items():
                for pieces, cc in _split(t[j], q - j).items():
                    nl = list(legs)
                    for r, pc in enumerate(pieces):
                        nl[j + r] = mono_mul(nl[j + r], pc)
                    add_into(nxt, tuple(nl), cl * cc)
            cur = nxt
        for legs, cl in cur.items():
            if tuple_weight(legs) <= D:
                add_into(out, (form, S, legs), x * cl)
    return FormalSum(out)


def coinvariance_defect(c: FormalSum, D: int) -> FormalSum:
    """v<0> (x) eta<0> (x) f~ (x) S(v<1> eta<1>)  -  v (x) eta (x) f~<0> (x) f~<1>,
    where f~<0> (x) f~<1> = f^0(1) (x) ... (x) f^q(1) (x) f^0(2) ... f^q(2)."""
    out: dict = {}
    for (form, S, t), x in c.items():
        base = tuple_weight(t)
        for (w0, mw), cw in omega_coaction(form, D).items():
            for smw, cs in s_antipode(mw).items():
                for (me, S2), ce in sstar_coaction(S, D).items():
                    last = mono_mul(smw, me)
                    if base + sum(last) <= D:
                        add_into(out, (w0, S2, t + (last,)), x * cw * cs * ce)
        cur = {((), ONE): Fraction(1)}
        for m in t:
            nxt: dict = {}
            for (legs, prod), cl in cur.items():
                for (a, b), cc in _split(m, 2).items():
                    add_into(nxt, (legs + (a,), mono_mul(prod, b)), cl * cc)
            cur = nxt
        for (legs, prod), cl in cur.items():
            nt = legs + (prod,)
            if tuple_weight(nt) <= D:
                add_into(out, (form, S, nt), -x * cl)
    return FormalSum(out)


def check_coinvariant(c: FormalSum, D: int) -> FormalSum:
    if coinvariance_defect(c, D):
        raise IntegrityError("element is not coinvariant")
    return c


def iso_J(c: FormalSum, D: int) -> FormalSum:
    """Inhomogeneous form of J(v (x) eta (x) f^0..f^q)(psi_0..psi_q) = v (x) eta . f^0(psi_0)...f^q(psi_q):
    f^k is evaluated on psi_{k+1} ... psi_q, i.e. split over slots k+1..q."""
    out: dict = {}
    for (form, S, t), x in c.items():
        q = len(t) - 1
        if q < 0:
            raise MalformedInput("coinvariant elements have at least one F-leg")
        if t[q]:
            continue
        cur = {tuple([ONE] * q): Fraction(1)}
        for k in range(q):
            nxt: dict = {}
            for legs, cl in cur.items():
                for pieces, cc in _split(t[k], q - k).items():
                    nl = list(legs)
                    for r, pc in enumerate(pieces):
                        nl[k + r] = mono_mul(nl[k + r], pc)
                    add_into(nxt, tuple(nl), cl * cc)
            cur = nxt
        for legs, cl in cur.items():
            if tuple_weight(legs) <= D:
                add_into(out, (form, S, legs), x * cl)
    return FormalSum(out)


def iso_J_eval(c: FormalSum, psis: Sequence[Jet], cap: int = None) -> FormalSum:
    """J(c)(psi_0, ..., psi_q) evaluated directly (homogeneous form)."""
    out: dict = {}
    for (form, S, t), x in c.items():
        if len(t) != len(psis):
            raise MalformedInput("arity mismatch")
        v = x
        for m, psi in zip(t, psis):
            v *= jets.evaluate(FormalSum.basis(m), psi)
        if v:
            add_into(out, (form, S), v)
    res = FormalSum(out)
    return _cut(res, cap) if cap is not None else res


def coinv_bN(c: FormalSum, D: int) -> FormalSum:
    """b_N^* transported to coinvariants: I o b_N^* o I^-1."""
    return iso_I(hopf.bN_star(iso_I_inv(c, D), D), D)


def coinv_dce(c: FormalSum, D: int) -> FormalSum:
    return iso_I(hopf.d_ce48(iso_I_inv(c, D), D), D)


# ---------------------------------------------------------------------------
# the cocycles dl, l and 1 (x) theta^0 + l

def _poly_series(order: int):
    """psi'(x) and psi''(x) as series with F(N)-polynomial coefficients."""
    d1 = [{ONE: Fraction(1)}] + [{(j,): Fraction(j + 1)} for j in range(1, order + 1)]
    d2 = [{(j + 1,): Fraction((j + 2) * (j + 1))} for j in range(order)] + [{}]
    return d1, d2


def _ps_mul(a, b, n):
    out = [dict() for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n + 1 - i):
            for m1, c1 in a[i].items():
                for m2, c2 in b[j].items():
                    add_into(out[i + j], mono_mul(m1, m2), c1 * c2)
    return out


def _ps_recip(a, n):
    # 1 / a with a[0] == 1
    inv = [dict() for _ in range(n + 1)]
    inv[0] = {ONE: Fraction(1)}
    for k in range(1, n + 1):
        acc: dict = {}
        for j in range(1, k + 1):
            for m1, c1 in a[j].items():
                for m2, c2 in inv[k - j].items():
                    add_into(acc, mono_mul(m1, m2), -c1 * c2)
        inv[k] = {m: c for m, c in acc.items() if c}
    return inv


def build_group_cocycles(order: int) -> Dict[str, FormalSum]:
    """dl: psi -> psi''/psi' dx,  l: psi -> log psi'(x),  and 1 (x) theta^0 + l,
    as inhomogeneous 1-cochains (0-cochain for the theta^0 part), exact up to
    x-degree ``order``."""
    if order < 2:
        raise MalformedInput("order must be >= 2")
    n = order
    d1, d2 = _poly_series(n)
    q = _ps_mul(d2, _ps_recip(d1, n), n)
    dl: dict = {}
    for d in range(n):
        for m, c in q[d].items():
            if c:
                add_into(dl, (("f", d), (), (m,)), c)
    # log psi' = integral of psi''/psi' (log psi'(0) = 0)
    l: dict = {}
    for d in range(n):
        for m, c in q[d].items():
            if c:
                add_into(l, (("x", d + 1), (), (m,)), c / (d + 1))
    ell = FormalSum(l)
    return {"dl": FormalSum(dl), "l": ell,
            "theta0+l": ell + FormalSum.basis((("x", 0), (0,), ()))}


# ---------------------------------------------------------------------------
# the total complex and the comparison with the Hopf classes

def group_complex(D: int):
    """Total complex of polynomial group cochains with F-weight <= D."""
    from .homology import WindowedComplex, hopf_basis

    def basis(n):
        return [b for p in range(0, min(n, 2) + 1) for b in hopf_basis(p, n - p, D)]
    return WindowedComplex(basis, lambda v: total_group(v, D),
                           keep=lambda k: tuple_weight(k[2]) <= D, name="group D=%d" % D)


def _window(v: FormalSum, D: int) -> FormalSum:
    return v.filter(lambda k: tuple_weight(k[2]) <= D and form_weight(k[0]) <= D + 1)


def compare_classes(D: int, coordinates: str = "literal") -> dict:
    """J o I of lambda' and mu' against 1 (x) theta^0 + l and dl in the group
    total complex: for each, whether the difference is a coboundary, with the
    witness w (total_group(w) == difference)."""
    cx = group_complex(D)
    cls = build_group_cocycles(D + 2)
    out = {}
    for name, src, target in (("lambda", hopf.lambda_prime(D, coordinates), cls["theta0+l"]),
                              ("mu", hopf.mu_prime(D, coordinates), cls["dl"])):
        image = iso_J(check_coinvariant(iso_I(src, D + 2), D + 2), D + 2)
        diff = _window(image - target, D)
        ok, wit = cx.is_coboundary(diff, 1)
        out[name] = {"target_closed": cx.is_cocycle(_window(target, D)),
                     "coboundary": ok, "witness": wit, "difference": diff}
    return out
