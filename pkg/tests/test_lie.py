import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw import lie
from cmw import homology as H
from cmw.core import FormalSum, MalformedInput

D = 6
BASIS = [k for p in range(3) for q in range(3) for w in (0, 1, 2) for k in H.lie_basis(p, q, D, w)]
cut = lambda v: lie.truncate_n(v, D)
basis_el = st.sampled_from(BASIS).map(FormalSum.basis)


@pytest.mark.parametrize("d", [lambda v: lie.d_up(v, D), lambda v: cut(lie.d_right(v, D)),
                               lambda v: cut(lie.d_tot(v, D))], ids=["up", "right", "total"])
def test_differentials_square_to_zero(d):
    for k in BASIS:
        assert cut(d(d(FormalSum.basis(k)))) == 0, k


@given(basis_el)
def test_total_is_transported_ce_differential(c):
    lhs = cut(lie.d_tot(c, D))
    rhs = cut(lie.natural_iso(lie.d_ce(lie.natural_iso_inv(c), "W1", D=D)))
    assert lhs == rhs


@given(basis_el)
def test_natural_iso_roundtrip(c):
    assert lie.natural_iso(lie.natural_iso_inv(c)) == c


@given(basis_el, basis_el)
def test_cup_leibniz(a, b):
    p = len(next(iter(a.keys()))[1]) + len(next(iter(a.keys()))[2])
    lhs = cut(lie.d_tot(lie.tot_cup(a, b), D))
    rhs = cut(lie.tot_cup(lie.d_tot(a, D), b) + lie.tot_cup(a, lie.d_tot(b, D)) * (-1) ** p)
    assert lhs == rhs


def test_horizontal_of_theta0():
    assert lie.d_right(lie.bi(("x", 0), (0,)), D) == lie.bi(("x", 0), (-1,), (1,), 2)
    assert lie.d_right(lie.bi(("x", 0), (0,)), D, "literal") == lie.bi(("x", 0), (-1,), (1,), -2)


@pytest.mark.parametrize("Dw", [4, 6, 8])
def test_generators_are_total_cocycles(Dw):
    assert lie.truncate_n(lie.d_tot(lie.lam(Dw), Dw), Dw) == 0
    assert lie.truncate_n(lie.d_tot(lie.mu(Dw), Dw), Dw) == 0


@pytest.mark.parametrize("args", [(1, 2), (2, 1), (2, 5), (1, 3)])
def test_pointwise_matches_symbolic(args):
    c = lie.lam_n(12)
    sym = lie.d_right(c, 12)
    w = tuple(sorted(args))
    sign = 1 if tuple(args) == w else -1
    expected = FormalSum({(f, S): x * sign for (f, S, N), x in sym.items() if N == w})
    assert lie.d_right_pointwise(c, args) == expected


def test_bad_word_rejected():
    with pytest.raises(MalformedInput):
        lie.bi(("x", 0), (1,))


def test_d_ce_needs_window():
    with pytest.raises(MalformedInput):
        lie.d_ce(FormalSum.basis((("x", 0), ())), "W1")
