from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw import text
from cmw.core import FormalSum, MalformedInput

forms = st.sampled_from([("x", 0), ("x", 1), ("x", 12), ("f", 0), ("f", 3)])
S = st.sampled_from([(), (-1,), (0,), (-1, 0)])
mono = st.lists(st.integers(1, 12), max_size=3).map(lambda l: tuple(sorted(l)))
hkey = st.tuples(forms, S, st.lists(mono, max_size=3).map(tuple))
lkey = st.tuples(forms, S, st.lists(st.integers(1, 9), max_size=3, unique=True).map(lambda l: tuple(sorted(l))))
coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7).filter(bool)


@given(st.lists(st.tuples(hkey, coeff), max_size=4))
def test_hopf_roundtrip(terms):
    v = FormalSum(terms)
    assert text.parse(text.render(v)) == v


@given(st.lists(st.tuples(lkey, coeff), max_size=4))
def test_lie_roundtrip(terms):
    v = FormalSum(terms)
    assert text.parse(text.render(v, "lie"), "lie") == v


@pytest.mark.parametrize("s,key,c", [
    ("1⊗θ0", (("x", 0), (0,), ()), 1),
    ("-2(1⊗θ⁻¹⊗x₁)", (("x", 0), (-1,), ((1,),)), -2),
    ("−2(1⊗θ⁻¹⊗x₁)", (("x", 0), (-1,), ((1,),)), -2),
    ("3/2*x^2 (x) theta^-1 (x) x_1x_2", (("x", 2), (-1,), ((1, 2),)), Fraction(3, 2)),
    ("f0⊗x1", (("f", 0), (), ((1,),)), 1),
    ("1 (x) theta^0", (("x", 0), (0,), ()), 1),
    ("2 (x) theta^0", None, None),
    ("2(1 (x) theta^0)", (("x", 0), (0,), ()), 2),
])
def test_parse_examples(s, key, c):
    if key is None:
        with pytest.raises(MalformedInput):
            text.parse(s)
        return
    assert text.parse(s) == FormalSum.basis(key, c)


def test_render_example():
    assert text.render(FormalSum.basis((("x", 0), (-1,), ((1,),)), -2)) == "−2(1⊗θ⁻¹⊗x₁)"
    assert text.render(FormalSum()) == "0"


@pytest.mark.parametrize("s", ["1⊗θ1", "q⊗θ0", "1⊗θ0⊗θ-1", "1⊗xx"])
def test_parse_errors(s):
    with pytest.raises(MalformedInput):
        text.parse(s)


def test_lie_rejects_monomial_legs():
    with pytest.raises(MalformedInput):
        text.parse("1⊗x₁", "lie")
