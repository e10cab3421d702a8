import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw import group, hopf, jets, suites
from cmw.core import FormalSum, IntegrityError, MalformedInput

ORDER = 7
coeff = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2))
jet = st.lists(coeff, min_size=ORDER, max_size=ORDER).map(lambda c: jets.Jet(c, ORDER))
forms = st.sampled_from([("x", 0), ("x", 1), ("x", 2), ("f", 0), ("f", 1)])
words = st.sampled_from([(), (-1,), (0,), (-1, 0)])


@given(forms, jet, jet)
def test_omega_action_is_right_action(w, a, b):
    v = FormalSum.basis(w)
    cap = 4
    assert group.group_act(group.group_act(v, a, cap), b, cap) == group.group_act(v, group.gmul(a, b), cap)


@given(words, jet, jet)
def test_sstar_action_is_right_action(S, a, b):
    lhs = group.sstar_act(S, a)
    lhs = sum((group.sstar_act(k, b) * c for k, c in lhs.items()), FormalSum()) if lhs else FormalSum()
    assert lhs == group.sstar_act(S, group.gmul(a, b))


@given(jet)
def test_theta0_action(psi):
    assert group.sstar_act((0,), psi) == FormalSum({(0,): 1, (-1,): 2 * psi[1]})


def test_group_cocycle_examples():
    for c in suites.group_cocycle_checks(8, 1):
        assert c.passed, c.name


def test_dl_values():
    cls = group.build_group_cocycles(6)
    psi = jets.Jet([1, 0, 0, 0, 0, 0], 6)
    v = group.evaluate(cls["dl"], [psi], 4)
    assert v == FormalSum({(("f", 0), ()): 2, (("f", 1), ()): -4, (("f", 2), ()): 8, (("f", 3), ()): -16})
    v = group.evaluate(cls["l"], [psi], 4)
    assert v == FormalSum({(("x", 1), ()): 2, (("x", 2), ()): -2, (("x", 3), ()): Fraction(8, 3), (("x", 4), ()): -4})


@pytest.mark.parametrize("check", suites.group_structure_checks(6, ORDER, 10, 3), ids=lambda c: c.anchor)
def test_group_structure(check):
    assert check.passed, check.detail


@pytest.mark.parametrize("p", [0, 1])
@pytest.mark.parametrize("q", [0, 1, 2])
def test_commutation_on_basis(p, q):
    from cmw import homology as H
    D = 5
    for k in H.hopf_basis(p, q, 3):
        c = FormalSum.basis(k)
        assert group.bN_group(group.bs_group(c, D), D) == group.bs_group(group.bN_group(c, D), D)
        assert group.total_group(group.total_group(c, D), D) == 0


def test_non_coinvariant_rejected():
    c = FormalSum.basis((("x", 1), (), ((1,),)))
    with pytest.raises(IntegrityError):
        group.check_coinvariant(c, 4)


def test_arity_mismatch():
    with pytest.raises(MalformedInput):
        group.evaluate(FormalSum.basis((("x", 0), (0,), ())), [jets.Jet.identity(3)], 3)


def test_order_too_small():
    with pytest.raises(MalformedInput):
        group.build_group_cocycles(1)


@pytest.mark.parametrize("coordinates,ok", [("log", True), ("literal", False)])
def test_class_comparison(coordinates, ok):
    r = group.compare_classes(5, coordinates)
    assert r["lambda"]["coboundary"] == ok and r["mu"]["coboundary"] == ok
