import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw import jets
from cmw.core import FormalSum, MalformedInput, TruncationError

ORDER = 6
coeff = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
jet = st.lists(coeff, min_size=ORDER, max_size=ORDER).map(lambda c: jets.Jet(c, ORDER))
polys = st.lists(st.tuples(st.sampled_from([(), (1,), (2,), (1, 1), (3,), (1, 2)]), coeff), max_size=4).map(FormalSum)


@given(jet, jet, jet)
def test_group_associative(a, b, c):
    assert jets.compose(jets.compose(a, b), c) == jets.compose(a, jets.compose(b, c))


@given(jet)
def test_group_inverse(a):
    e = jets.Jet.identity(ORDER)
    assert jets.compose(a, jets.invert(a)) == e == jets.compose(jets.invert(a), a)


@given(polys, jet, jet)
def test_coproduct_is_dual_to_composition(f, a, b):
    lhs = jets.evaluate(f, jets.compose(a, b))
    rhs = sum((c * jets.evaluate(FormalSum.basis(x), a) * jets.evaluate(FormalSum.basis(y), b)
               for (x, y), c in jets.coproduct(f).items()), Fraction(0))
    assert lhs == rhs


@given(polys, jet)
def test_antipode_is_inversion(f, a):
    assert jets.evaluate(jets.antipode(f), a) == jets.evaluate(f, jets.invert(a))


@given(polys, polys, jet)
def test_evaluation_is_multiplicative(f, g, a):
    assert jets.evaluate(jets.poly_mul(f, g), a) == jets.evaluate(f, a) * jets.evaluate(g, a)


@pytest.mark.parametrize("w", range(1, 7))
def test_coproduct_coassociative(w):
    for m in jets.monomials(w):
        d = jets.coproduct(FormalSum.basis(m))
        l = r = FormalSum()
        for (a, b), c in d.items():
            l = l + jets.coproduct(FormalSum.basis(a)).apply(lambda k, b=b: FormalSum.basis((k[0], k[1], b))) * c
            r = r + jets.coproduct(FormalSum.basis(b)).apply(lambda k, a=a: FormalSum.basis((a, k[0], k[1]))) * c
        assert l == r


@pytest.mark.parametrize("i", range(1, 8))
@pytest.mark.parametrize("j", range(1, 8))
def test_coordinate_pairing(i, j):
    assert jets.pair(FormalSum.basis((i,)), (j,)) == (1 if i == j else 0)


@pytest.mark.parametrize("i", range(1, 7))
def test_log_coordinates_pair_like_coordinates(i):
    for j in range(1, 7):
        assert jets.pair(jets.log_coordinate(i), (j,)) == (1 if i == j else 0)


@given(jet)
def test_log_coordinates_generate_log_derivative(a):
    # sum (i+1) l_i(psi) x^i = log psi'(x)
    d = jets.s_log(a.derivative(), ORDER)
    for i in range(1, ORDER + 1):
        assert (i + 1) * jets.evaluate(jets.log_coordinate(i), a) == d[i]


@given(jet)
def test_text_roundtrip(a):
    assert jets.Jet.from_text(a.to_text()) == a


@pytest.mark.parametrize("s", ["1; 2", "[2; 1]", "[x; 1]"])
def test_bad_jet_text(s):
    with pytest.raises((MalformedInput, ValueError)):
        jets.Jet.from_text(s)


def test_coordinate_beyond_order():
    with pytest.raises(TruncationError):
        jets.Jet([1, 2], 2)[3]


def test_random_jet_is_deterministic():
    assert jets.random_jet(random.Random(3), 5) == jets.random_jet(random.Random(3), 5)


@pytest.mark.parametrize("X", [-1, 0])
@given(polys, polys)
def test_s_acts_by_derivations(X, f, g):
    act = lambda h: jets.s_action_on_F(X, h, "lie")
    assert act(jets.poly_mul(f, g)) == jets.poly_mul(act(f), g) + jets.poly_mul(f, act(g))
