"""Verification suites: named identities with an anchor label and an exact
pass/fail verdict.  Shared by the command line driver and the test-suite.

Every check compares two FormalSums (or booleans) exactly; a failing check
keeps both sides so the driver can print the difference.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional

from .core import FormalSum
from . import jets, lie, hopf, group
from . import homology as H


@dataclass
class Check:
    name: str
    anchor: str
    passed: bool
    expected: Optional[FormalSum] = None
    computed: Optional[FormalSum] = None
    detail: Dict[str, object] = field(default_factory=dict)


@dataclass
class Config:
    D: int = 6
    k: int = 8
    seed: int = 0
    delta0: Fraction = hopf.DELTA0
    coordinates: str = "log"
    samples: int = 20


def eq(name: str, anchor: str, computed, expected, **detail) -> Check:
    if isinstance(computed, FormalSum) or isinstance(expected, FormalSum):
        computed = computed if isinstance(computed, FormalSum) else FormalSum()
        expected = expected if isinstance(expected, FormalSum) else FormalSum()
        return Check(name, anchor, computed == expected, expected, computed, dict(detail))
    return Check(name, anchor, bool(computed == expected), detail=dict(detail, computed=computed, expected=expected))


def _fw_cut(D):
    return lambda v: v.filter(lambda k: hopf.tuple_weight(k[2]) <= D)


# ---------------------------------------------------------------------------
# core: F(N) as a Hopf algebra, the pairing with U(n), the jet group

def fn_hopf_axioms(W: int) -> List[Check]:
    out = []
    bad = {"coassociativity": 0, "counit": 0, "antipode": 0}
    for w in range(1, W + 1):
        for m in jets.monomials(w):
            f = FormalSum.basis(m)
            d = jets.coproduct(f)
            l = FormalSum()
            r = FormalSum()
            for (a, b), c in d.items():
                l = l + jets.coproduct(FormalSum.basis(a)).apply(lambda k, b=b: FormalSum.basis((k[0], k[1], b))) * c
                r = r + jets.coproduct(FormalSum.basis(b)).apply(lambda k, a=a: FormalSum.basis((a, k[0], k[1]))) * c
            bad["coassociativity"] += l != r
            e1 = FormalSum()
            e2 = FormalSum()
            for (a, b), c in d.items():
                if not a:
                    e1 = e1 + FormalSum.basis(b, c)
                if not b:
                    e2 = e2 + FormalSum.basis(a, c)
            bad["counit"] += not (e1 == f and e2 == f)
            acc = FormalSum()
            for (a, b), c in d.items():
                acc = acc + jets.poly_mul(jets.antipode(FormalSum.basis(a)), FormalSum.basis(b)) * c
            bad["antipode"] += acc != 0
    for name, n in bad.items():
        out.append(eq("F(N) %s, weight <= %d" % (name, W), "faa-di-bruno/" + name, n, 0))
    return out


def pairing_checks(W: int) -> List[Check]:
    bad = 0
    for i in range(1, W + 1):
        for j in range(1, W + 1):
            bad += jets.pair(FormalSum.basis((i,)), (j,)) != (1 if i == j else 0)
    return [eq("<x_i, e_j> = delta_ij, i, j <= %d" % W, "faa-di-bruno/coordinate-pairing", bad, 0)]


def jet_group_checks(order: int, seed: int, n: int = 5) -> List[Check]:
    rng = random.Random(seed)
    ba = bi = 0
    e = jets.Jet.identity(order)
    for _ in range(n):
        a, b, c = (jets.random_jet(rng, order) for _ in range(3))
        ba += jets.compose(jets.compose(a, b), c) != jets.compose(a, jets.compose(b, c))
        inv = jets.invert(a)
        bi += not (jets.compose(a, inv) == e and jets.compose(inv, a) == e)
    return [eq("jet group associativity, order %d" % order, "jet-group/associativity", ba, 0),
            eq("jet group inverses, order %d" % order, "jet-group/inverse", bi, 0)]


def suite_core(cfg: Config) -> List[Check]:
    W = min(max(cfg.D, 4), 10)
    return fn_hopf_axioms(W) + pairing_checks(W) + jet_group_checks(max(cfg.k, 12), cfg.seed)


# ---------------------------------------------------------------------------
# lie: the generators in the Lie bicomplex

def suite_lie(cfg: Config) -> List[Check]:
    D = cfg.D
    th0 = lie.bi(("x", 0), (0,))
    mu_long = lie.mu(2 * D + 2)
    bad = [(p, q) for p in range(-1, D + 1) for q in range(-1, D + 1)
           if lie.d_right_pointwise(mu_long, (p, q)) != 0]
    cut = lambda v: lie.truncate_n(v, D)
    return [
        eq("->d(mu)(e_p, e_q) = 0, -1 <= p, q <= %d" % D, "lie/mu-horizontal-pointwise", len(bad), 0, failures=bad),
        eq("up-d(mu) = 0", "lie/mu-vertical", cut(lie.d_up(lie.mu(D), D)), FormalSum()),
        eq("up-d(1 (x) theta^0) = 0", "lie/theta0-vertical", lie.d_up(th0, D), FormalSum()),
        eq("->d(1 (x) theta^0) = 2 (1 (x) theta^-1 (x) theta^1)", "lie/theta0-horizontal",
           lie.d_right(th0, D), lie.bi(("x", 0), (-1,), (1,), 2)),
        eq("->d(sum (i+1) x^i (x) theta^i) = 0", "lie/lambda-n-horizontal",
           cut(lie.d_right(lie.lam_n(D), D)), FormalSum()),
        eq("D_tot(lambda) = 0", "lie/lambda-total", cut(lie.d_tot(lie.lam(D), D)), FormalSum()),
        eq("D_tot(mu) = 0", "lie/mu-total", cut(lie.d_tot(lie.mu(D), D)), FormalSum()),
    ]


# ---------------------------------------------------------------------------
# hopf: the bicomplex, the cocyclic module, multiplicativity, the classes

def bicomplex_class_checks(D: int, coordinates: str) -> List[Check]:
    cut = _fw_cut(D)
    th0 = FormalSum.basis((("x", 0), (0,), ()))
    lam_n = hopf.lambda_prime(D, coordinates) - th0
    return [
        eq("b_N^*(1 (x) theta^0) = -2 (1 (x) theta^-1 (x) x_1)", "hopf-bicomplex/theta0-horizontal",
           hopf.bN_star(th0, D), FormalSum.basis((("x", 0), (-1,), ((1,),)), -2)),
        eq("b_N^*(sum (i+1) i f^{i-1} (x) x_i) = 0 [%s coordinates]" % coordinates,
           "hopf-bicomplex/mu-horizontal", cut(hopf.bN_star(hopf.mu_prime(D, coordinates), D)), FormalSum()),
        eq("b_N^*(sum (i+1) x^i (x) x_i) = 0 [%s coordinates]" % coordinates,
           "hopf-bicomplex/lambda-n-horizontal", cut(hopf.bN_star(lam_n, D)), FormalSum()),
        eq("D_tot(lambda') = 0 [%s coordinates]" % coordinates, "hopf-bicomplex/lambda-total",
           cut(hopf.d_tot48(hopf.lambda_prime(D, coordinates), D)), FormalSum()),
        eq("D_tot(mu') = 0 [%s coordinates]" % coordinates, "hopf-bicomplex/mu-total",
           cut(hopf.d_tot48(hopf.mu_prime(D, coordinates), D)), FormalSum()),
    ]


def _hcut(D):
    return lambda v: v.filter(lambda k: sum(sum(h[0]) for h in k[1]) <= D)


def cocyclic_samples() -> Dict[int, List[FormalSum]]:
    el = lambda form, legs: FormalSum.basis((form, tuple(legs)))
    return {
        0: [el(("x", 1), []), el(("f", 0), []), el(("x", 0), [])],
        1: [el(("x", 1), [((1,), (0, 0))]), el(("f", 0), [((), (1, 0))]), el(("x", 2), [((), (1, 1))]),
            el(("f", 1), [((1,), (1, 0))])],
        2: [el(("x", 1), [((), (1, 0)), ((), (0, 1))]), el(("f", 0), [((1,), (0, 0)), ((), (1, 0))]),
            el(("x", 0), [((1,), (0, 1)), ((2,), (0, 0))])],
        3: [el(("x", 0), [((), (1, 0)), ((), (0, 1)), ((1,), (0, 0))]),
            el(("f", 0), [((1,), (0, 0)), ((), (0, 1)), ((), (1, 0))])],
    }


def cocyclic_checks(D: int, delta0, max_q: int = 3) -> List[Check]:
    cut = _hcut(D)
    out = []
    bad = []
    for q, lst in cocyclic_samples().items():
        if q > max_q:
            continue
        for c in lst:
            for name, l, r in hopf.cosimplicial_identities(c, q, D, delta0):
                if cut(l) != cut(r):
                    bad.append((q, name))
    out.append(eq("cosimplicial and cyclic relations incl. t^(q+1) = id, q <= %d" % max_q,
                  "cocyclic/relations", len(bad), 0, failures=bad))
    bb = BB = bBBb = 0
    for q, lst in cocyclic_samples().items():
        if q > max_q:
            continue
        for c in lst:
            bb += cut(hopf.hochschild_b(hopf.hochschild_b(c, q, D, delta0), q + 1, D, delta0)) != 0
            if q >= 1:
                Bc = hopf.connes_B(c, q, D, delta0)
                if q >= 2:
                    BB += cut(hopf.connes_B(Bc, q - 1, D, delta0)) != 0
                x = hopf.hochschild_b(Bc, q - 1, D, delta0) + hopf.connes_B(hopf.hochschild_b(c, q, D, delta0), q + 1, D, delta0)
                bBBb += cut(x) != 0
    out.append(eq("b^2 = 0", "cocyclic/b-squared", bb, 0))
    out.append(eq("B^2 = 0", "cocyclic/B-squared", BB, 0))
    out.append(eq("bB + Bb = 0", "cocyclic/bB-anticommute", bBBb, 0))
    return out


def sayd_checks(D: int, delta0) -> List[Check]:
    forms = [("x", 0), ("x", 1), ("x", 2), ("f", 0), ("f", 1), ("f", 2)]
    hs = [(m, u) for m in [(), (1,), (2,), (1, 1)] for u in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)]]
    bad = []
    for w in forms:
        for h in hs:
            l, r = hopf.sayd_condition(w, h, D, delta0)
            if l != r:
                bad.append((w, h))
    st = [w for w in forms if (lambda lr: lr[0] != lr[1])(hopf.sayd_stability(w, D, delta0))]
    return [eq("SAYD condition on generators", "sayd/condition", len(bad), 0, failures=bad),
            eq("SAYD stability", "sayd/stability", len(st), 0, failures=st)]


def lie_hopf_checks(D: int) -> List[Check]:
    bad_b, bad_c, bad_e, bad_i = [], [], [], []
    for X in (-1, 0):
        for Y in (-1, 0):
            l, r = hopf.lie_hopf_bracket(X, Y, D)
            if l != r:
                bad_b.append((X, Y))
        for w in range(1, D):
            for m in jets.monomials(w):
                l, r, e = hopf.lie_hopf_coproduct(X, m, D)
                if l != r:
                    bad_c.append((X, m))
                if e:
                    bad_e.append((X, m))
        for form in [("x", j) for j in range(4)] + [("f", j) for j in range(3)]:
            l, r = hopf.induced_module(X, form, D)
            if l != r:
                bad_i.append((X, form))
    return [eq("coaction of s is a Lie-Hopf bracket map", "lie-hopf/bracket", len(bad_b), 0, failures=bad_b),
            eq("Delta(X |> f) = X . Delta(f)", "lie-hopf/coproduct", len(bad_c), 0, failures=bad_c),
            eq("eps(X |> f) = 0", "lie-hopf/counit", len(bad_e), 0, failures=bad_e),
            eq("induced-module condition on Omega", "lie-hopf/induced-module", len(bad_i), 0, failures=bad_i)]


def _f_tuples(D: int, max_legs: int) -> List[tuple]:
    monos = [jets.ONE] + [m for w in range(1, D + 1) for m in jets.monomials(w)]
    out = []
    for n in range(max_legs + 1):
        for t in product(monos, repeat=n):
            if hopf.tuple_weight(t) <= D:
                out.append(t)
    return out


def lemma_checks(D: int, max_legs: int = 2) -> Dict[str, Check]:
    """Bicomplex lemmas on all basis inputs with at most max_legs F-legs."""
    tuples = _f_tuples(D, max_legs)
    nonempty = [t for t in tuples if t]
    bad_split = [(X, f, g) for X in (-1, 0) for f in tuples for g in nonempty
             if len(f) + len(g) <= max_legs + 1 and hopf.tuple_weight(f + g) <= D
             and (lambda lr: lr[0] != lr[1])(hopf.bullet_split_identity(X, f, g, D))]
    bad_sstar = [S for S in lie.S_WORDS if (lambda lr: lr[0] != lr[1])(hopf.sstar_coaction_identity(S, D))]
    forms = [("x", j) for j in range(D + 1)] + [("f", j) for j in range(D)]
    bad_tail = [(a, S) for a in forms for S in lie.S_WORDS if (lambda lr: lr[0] != lr[1])(hopf.twisted_tail_identity(a, S, D))]
    bad_dual = [f for f in tuples if (lambda lr: lr[0] != lr[1])(hopf.dual_basis_identity(f, D))]
    bad_dual_c = [f for f in tuples if (lambda lr: lr[0] != lr[1])(hopf.dual_basis_identity_corrected(f, D))]
    n = len(tuples)
    return {
        "bullet-split": eq("X . (f (x) g) = X<0> . f (x) X<1> . g + f (x) X . g", "bicomplex-lemma/bullet-split", len(bad_split), 0, failures=bad_split[:5]),
        "sstar-coaction": eq("coaction on s* compatible with d_DR", "bicomplex-lemma/sstar-coaction", len(bad_sstar), 0, failures=bad_sstar),
        "twisted-tail": eq("twisted action on Omega (x) s* tails", "bicomplex-lemma/twisted-tail", len(bad_tail), 0, failures=bad_tail[:5]),
        "dual-basis-literal": eq("sum v^i<0> (x) X_i . f (x) v^i<-1> = sum v^i (x) X_i . f (x) 1 (as printed), %d inputs" % n,
                  "bicomplex-lemma/dual-basis-literal", len(bad_dual), 0, failures=bad_dual[:5]),
        "dual-basis": eq("sum v^i<0> (x) X_i . f (x) v^i<-1> = sum v^i (x) X_i<0> . f (x) X_i<1>, %d inputs" % n,
                   "bicomplex-lemma/dual-basis", len(bad_dual_c), 0, failures=bad_dual_c[:5]),
    }


def random_bicochain(rng: random.Random, kind: str, normalized: bool = False, weight_cap: int = 2) -> FormalSum:
    monos = ([] if normalized else [jets.ONE]) + [(1,), (2,), (1, 1)]
    form = (kind, rng.randint(0, weight_cap))
    S = rng.choice(lie.S_WORDS)
    t = tuple(rng.choice(monos) for _ in range(rng.randint(0, 2)))
    return FormalSum.basis((form, S, t), rng.randint(1, 3))


def multiplicativity_checks(D: int, n: int, seed: int) -> List[Check]:
    rng = random.Random(seed)
    cut = _fw_cut(D)
    bad = {"horizontal": 0, "vertical": 0, "total": 0}
    for _ in range(n):
        x = random_bicochain(rng, "x")
        y = random_bicochain(rng, rng.choice("xf"))
        k = next(iter(x.keys()))
        p, q = len(k[1]), len(k[2])
        l = cut(hopf.bN_star(hopf.cup413(x, y, D), D))
        r = cut(hopf.cup413(hopf.bN_star(x, D), y, D) + hopf.cup413(x, hopf.bN_star(y, D), D) * (-1) ** q)
        bad["horizontal"] += l != r
        l = cut(hopf.d_ce48(hopf.cup413(x, y, D), D))
        r = cut(hopf.cup413(hopf.d_ce48(x, D), y, D) + hopf.cup413(x, hopf.d_ce48(y, D), D) * (-1) ** p)
        bad["vertical"] += l != r
        l = cut(hopf.d_tot48(hopf.star(x, y, D), D))
        r = cut(hopf.star(hopf.d_tot48(x, D), y, D) + hopf.star(x, hopf.d_tot48(y, D), D) * (-1) ** (p + q))
        bad["total"] += l != r
    vbad = 0
    for _ in range(n):
        x = random_bicochain(rng, "x", normalized=True)
        y = random_bicochain(rng, rng.choice("xf"), normalized=True)
        l = lie.truncate_n(hopf.van_est(cut(hopf.star(x, y, D))), D)
        r = lie.truncate_n(lie.tot_cup(hopf.van_est(x), hopf.van_est(y)), D)
        vbad += l != r
    return [eq("b_N^* Leibniz rule for the cup product, %d pairs" % n, "multiplicativity/horizontal", bad["horizontal"], 0),
            eq("d_CE Leibniz rule for the cup product, %d pairs" % n, "multiplicativity/vertical", bad["vertical"], 0),
            eq("D_tot Leibniz rule for the star product, %d pairs" % n, "multiplicativity/total", bad["total"], 0),
            eq("van Est map is multiplicative on normalized cochains, %d pairs" % n, "multiplicativity/van-est", vbad, 0)]


def hopf_class_components(D: int, kind: str, coordinates: str) -> Dict[int, FormalSum]:
    src = hopf.lambda_prime(D, coordinates) if kind == "lambda" else hopf.mu_prime(D, coordinates)
    return hopf.split_by_degree(hopf.pipeline(src, D))


def hopf_class_checks(D: int, coordinates: str, delta0) -> List[Check]:
    out = []
    for kind in ("lambda", "mu"):
        comps = hopf_class_components(D, kind, coordinates)
        out.append(eq("%s_Hopf degree-3 part equals its closed form [%s coordinates]" % (kind, coordinates),
                      "hopf-cyclic/%s-closed-form" % kind, comps.get(3, FormalSum()),
                      hopf.hopf_class_display(D, kind, coordinates)))
        completed, wit = hopf.complete_total_cocycle(comps, D, delta0)
        ok = completed is not None and hopf.is_total_cocycle(completed, D, delta0)
        out.append(eq("%s_Hopf: b of the degree-3 part vanishes" % kind, "hopf-cyclic/%s-hochschild" % kind,
                      comps.get(3, FormalSum()) != 0 and
                      hopf.hochschild_b(comps[3], 3, D, delta0).filter(lambda k: hopf._hw(k[1]) <= D) == 0, True))
        out.append(eq("%s_Hopf completes to a total (b, B)-cocycle" % kind, "hopf-cyclic/%s-total" % kind,
                      ok, True, corrections={k: str(v) for k, v in (wit or {}).items()}))
    return out


def suite_hopf(cfg: Config) -> List[Check]:
    D = cfg.D
    out = bicomplex_class_checks(D, cfg.coordinates)
    out += cocyclic_checks(min(D, 4), cfg.delta0)
    out += sayd_checks(min(D, 4), cfg.delta0)
    out += lie_hopf_checks(D)
    lem = lemma_checks(min(D, 4))
    out += [lem[k] for k in ("bullet-split", "sstar-coaction", "twisted-tail", "dual-basis")]
    out += multiplicativity_checks(min(D, 5), cfg.samples, cfg.seed)
    out += hopf_class_checks(D, cfg.coordinates, cfg.delta0)
    return out


# ---------------------------------------------------------------------------
# spectral: E_1 classes and cup relations

def e1_checks(D: int, coordinates: str) -> List[Check]:
    out = []
    L = H.lie_bicomplex(D)
    th0 = lie.bi(("x", 0), (0,))
    r = L.e1_class(th0, 0, 1)
    out.append(eq("[1 (x) theta^0]_1 nonzero in E_1^{0,1} of the Lie bicomplex", "spectral/lie-theta0",
                  (r["closed"], r["nonzero"]), (True, True)))
    out.append(eq("d_1[1 (x) theta^0]_1 = 0 via a witness y with d_0 y = d_1(1 (x) theta^0)", "spectral/lie-theta0-d1",
                  (r["d1_closed"], r["witness"] is not None and bool(r["witness"])), (True, True),
                  witness=str(r["witness"])))
    r = L.e1_class(lie.mu(D), 1, 0)
    out.append(eq("[mu]_1 nonzero d_1-closed in E_1^{1,0} of the Lie bicomplex", "spectral/lie-mu",
                  (r["closed"], r["nonzero"], r["d1_closed"]), (True, True, True)))
    Hb = H.hopf_bicomplex(D)
    th = FormalSum.basis((("x", 0), (0,), ()))
    r = Hb.e1_class(th, 0, 1)
    out.append(eq("[1 (x) theta^0]_1 nonzero d_1-closed in E_1^{0,1} of the Hopf bicomplex", "spectral/hopf-theta0",
                  (r["closed"], r["nonzero"], r["d1_closed"]), (True, True, True)))
    r = Hb.e1_class(hopf.mu_prime(D, coordinates), 1, 0)
    out.append(eq("[mu']_1 nonzero d_1-closed in E_1^{1,0} of the Hopf bicomplex [%s coordinates]" % coordinates,
                  "spectral/hopf-mu", (r["closed"], r["nonzero"], r["d1_closed"]), (True, True, True)))
    return out


def cup_relation_checks(D: int) -> Dict[str, Check]:
    T = H.lie_bicomplex(D).total_complex()
    lam, mu = lie.lam(D), lie.mu(D)
    cut = lambda v: lie.truncate_n(v, D)
    lm, ml, ll = cut(lie.tot_cup(lam, mu)), cut(lie.tot_cup(mu, lam)), cut(lie.tot_cup(lam, lam))
    out = {}
    ok, w = T.is_coboundary(lm - ml, 2)
    out["commute"] = eq("lambda u mu - mu u lambda is a coboundary", "cup-relations/lambda-mu", ok, True,
                        witness=str(w) if ok else None)
    ok, w = T.is_coboundary(ll, 2)
    out["square"] = eq("lambda u lambda is a coboundary", "cup-relations/lambda-lambda", ok, True,
                       witness=str(w) if ok else None)
    out["graded"] = eq("lambda u mu + mu u lambda = 0", "cup-relations/graded-commutativity", lm + ml, FormalSum())
    ex, _ = T.is_coboundary(lm, 2)
    out["nontrivial"] = eq("lambda u mu is a nonzero class", "cup-relations/lambda-mu-class",
                           (T.is_cocycle(lm), ex), (True, False))
    return out


def suite_spectral(cfg: Config) -> List[Check]:
    rel = cup_relation_checks(cfg.D)
    return e1_checks(cfg.D, cfg.coordinates) + [rel["square"], rel["graded"], rel["nontrivial"]]


# ---------------------------------------------------------------------------
# group: polynomial group cohomology of N

def group_cocycle_checks(order: int, seed: int) -> List[Check]:
    rng = random.Random(seed)
    cap = order - 2
    D = order
    cls = group.build_group_cocycles(order)
    dl, ell = cls["dl"], cls["l"]
    th0 = FormalSum.basis((("x", 0), (0,), ()))
    ps = [jets.random_jet(rng, order) for _ in range(2)]
    psi = ps[0]
    pp = FormalSum.basis((("x", 0), (-1,)), 2 * psi[1])
    cutv = lambda v: v.filter(lambda k: group.form_weight(k[0]) <= cap)
    cutc = lambda v: v.filter(lambda k: group.form_weight(k[0]) <= cap and hopf.tuple_weight(k[2]) <= cap)
    return [
        eq("b_N(dl)(psi1, psi2) = 0", "group/dl-horizontal", group.bN_group_eval(dl, ps, cap), FormalSum()),
        eq("b_s(dl) = 0", "group/dl-vertical", cutc(group.bs_group(dl, D)), FormalSum()),
        eq("b_N(l)(psi1, psi2) = 0", "group/l-horizontal", group.bN_group_eval(ell, ps, cap), FormalSum()),
        eq("b_s(l)(psi) = psi''(0) theta^-1", "group/l-vertical", group.bs_group_eval(ell, [psi], cap), pp),
        eq("b_N(1 (x) theta^0)(psi) = -psi''(0) theta^-1", "group/theta0-horizontal",
           group.bN_group_eval(th0, [psi], cap), -pp),
        eq("b_s(1 (x) theta^0) = 0", "group/theta0-vertical", group.bs_group(th0, D), FormalSum()),
        eq("1 (x) theta^0 + l is a total cocycle", "group/theta0-l-total",
           cutc(group.total_group(cls["theta0+l"], D)), FormalSum()),
        eq("dl is a total cocycle", "group/dl-total", cutc(group.total_group(dl, D)), FormalSum()),
    ]


def group_structure_checks(D: int, order: int, n: int, seed: int) -> List[Check]:
    """Commutation, squares, homogeneous form, I/J roundtrips and chain maps
    on random windowed cochains.  Symbolic identities are exact at F-weight
    <= D; evaluations are compared up to form-weight D - 2."""
    rng = random.Random(seed)
    cap = D - 2
    bad = {k: [] for k in ("bN2", "bs2", "comm", "bN-eval", "bs-eval", "homog", "coinv", "IinvI", "IIinv",
                           "equiv", "J-hom", "J-bN", "J-dce")}
    for _ in range(n):
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        basis = H.hopf_basis(p, q, min(D - 2, 4))
        c = FormalSum({b: Fraction(rng.randint(1, 3)) for b in rng.sample(basis, min(4, len(basis)))})
        tag = (p, q)
        if group.bN_group(group.bN_group(c, D), D):
            bad["bN2"].append(tag)
        if group.bs_group(group.bs_group(c, D), D):
            bad["bs2"].append(tag)
        if group.bN_group(group.bs_group(c, D), D) != group.bs_group(group.bN_group(c, D), D):
            bad["comm"].append(tag)
        ps = [jets.random_jet(rng, order, 2) for _ in range(q + 2)]
        if group.evaluate(group.bN_group(c, D), ps[:q + 1], cap) != group.bN_group_eval(c, ps[:q + 1], cap):
            bad["bN-eval"].append(tag)
        if group.evaluate(group.bs_group(c, D), ps[:q], cap) != group.bs_group_eval(c, ps[:q], cap):
            bad["bs-eval"].append(tag)
        if group.homogeneous(group.bN_group(c, D), ps, cap) != group.bN_homogeneous_eval(c, ps, cap):
            bad["homog"].append(tag)
        I = group.iso_I(c, D)
        if group.coinvariance_defect(I, D):
            bad["coinv"].append(tag)
        back = group.iso_I_inv(I, D)
        if back != c.filter(lambda k: hopf.tuple_weight(k[2]) <= D):
            bad["IinvI"].append(tag)
        if group.iso_I(back, D) != I:
            bad["IIinv"].append(tag)
        qs = ps[:q + 1]
        g = jets.random_jet(rng, order, 2)
        if group.iso_J_eval(I, [jets.compose(x, g) for x in qs], cap) != group.value_act(group.iso_J_eval(I, qs, cap), g, cap):
            bad["equiv"].append(tag)
        if group.iso_J_eval(I, qs, cap) != group.homogeneous(group.iso_J(I, D), qs, cap):
            bad["J-hom"].append(tag)
        J = group.iso_J(I, D)
        if group.iso_J(group.coinv_bN(I, D), D) != group.bN_group(J, D):
            bad["J-bN"].append(tag)
        if group.iso_J(group.coinv_dce(I, D), D) != -group.bs_group(J, D):
            bad["J-dce"].append(tag)
    names = {
        "bN2": ("b_N^2 = 0", "group/bN-square"),
        "bs2": ("b_s^2 = 0", "group/bs-square"),
        "comm": ("b_N b_s = b_s b_N", "group/commutation"),
        "bN-eval": ("symbolic b_N agrees with the inhomogeneous formula on jets", "group/bN-inhomogeneous"),
        "bs-eval": ("symbolic b_s agrees with flow derivatives on jets", "group/bs-flow"),
        "homog": ("homogeneous and inhomogeneous b_N agree", "group/bN-homogeneous"),
        "coinv": ("images of I are coinvariant", "group/I-coinvariant"),
        "IinvI": ("I^-1 o I = id", "group/I-roundtrip"),
        "IIinv": ("I o I^-1 = id on coinvariants", "group/I-inverse-roundtrip"),
        "equiv": ("J is N-equivariant", "group/J-equivariance"),
        "J-hom": ("J agrees with its inhomogeneous form", "group/J-inhomogeneous"),
        "J-bN": ("J o b_N^*coinv = b_N o J", "group/J-horizontal-chain-map"),
        "J-dce": ("J o d_CE^coinv = -b_s o J", "group/J-vertical-chain-map"),
    }
    return [eq(names[k][0] + ", %d random cochains" % n, names[k][1], len(v), 0, failures=v[:5]) for k, v in bad.items()]


def group_class_checks(D: int, coordinates: str) -> List[Check]:
    r = group.compare_classes(D, coordinates)
    out = []
    for name, target in (("lambda", "1 (x) theta^0 + l"), ("mu", "dl")):
        x = r[name]
        out.append(eq("J o I(%s') - (%s) is a coboundary [%s coordinates]" % (name, target, coordinates),
                      "group/%s-comparison" % name, (x["target_closed"], x["coboundary"]), (True, True),
                      witness=str(x["witness"]) if x["coboundary"] else None))
    return out


def suite_group(cfg: Config) -> List[Check]:
    order = max(cfg.k, 6)
    return (group_cocycle_checks(order, cfg.seed)
            + group_structure_checks(min(cfg.D, 6), order, cfg.samples, cfg.seed)
            + group_class_checks(cfg.D, cfg.coordinates))


SUITES: Dict[str, Callable[[Config], List[Check]]] = {
    "core": suite_core,
    "lie": suite_lie,
    "hopf": suite_hopf,
    "spectral": suite_spectral,
    "group": suite_group,
}
