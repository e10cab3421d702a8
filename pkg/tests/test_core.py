from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw.core import (FormalSum, IntegrityError, MalformedInput, WeightWindow, fmt_scalar, from_json_terms,
                      parse_scalar, to_json_terms, truncate, wedge_normalize, weight_of)

keys = st.sampled_from([("x", 0), ("x", 1), ("f", 2), ("e", -1), ("t", 3), (("x", 1), ("t", 1))])
coef = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
sums = st.lists(st.tuples(keys, coef), max_size=6).map(FormalSum)


@given(sums, sums, sums)
def test_vector_space_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == FormalSum()
    assert (a + b) * 3 == a * 3 + b * 3


@given(sums)
def test_no_stored_zeros(a):
    assert all(c != 0 for _, c in a.items())
    assert (a * 0).is_zero()


@given(sums)
def test_json_roundtrip(a):
    assert from_json_terms(to_json_terms(a)) == a


@given(sums)
def test_serialization_is_sorted(a):
    t1 = to_json_terms(a)
    t2 = to_json_terms(FormalSum(list(reversed(list(a.items())))))
    assert t1 == t2


@pytest.mark.parametrize("c,s", [(Fraction(1), "1/1"), (Fraction(-3, 4), "-3/4"), (Fraction(0), "0/1")])
def test_scalar_text(c, s):
    assert fmt_scalar(c) == s
    assert parse_scalar(s) == c


def test_equality_with_zero():
    assert FormalSum() == 0
    assert FormalSum.basis(("x", 1)) != 0


@pytest.mark.parametrize("word,expected", [
    ((1, 0), ((0, 1), -1)),
    ((2, 0, 1), ((0, 1, 2), 1)),
    ((3, 2, 1), ((1, 2, 3), -1)),
    ((1, 1), None),
])
def test_wedge_normalize(word, expected):
    assert wedge_normalize(word) == expected


def test_wedge_rejects_mixed_families():
    with pytest.raises(MalformedInput):
        wedge_normalize([("t", 1), ("e", 2)])


@given(st.permutations([0, 1, 2, 3]))
def test_wedge_sign_is_permutation_sign(p):
    w, s = wedge_normalize(p)
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    assert w == (0, 1, 2, 3) and s == (-1) ** inv


@pytest.mark.parametrize("key,w", [(("e", 3), 3), (("x", 2), 2), (("f", 0), 1), (("t", 2), -2),
                                   ((("f", 1), ("t", 2)), 0)])
def test_weights(key, w):
    assert weight_of(key) == w


def test_window_truncation():
    v = FormalSum({("x", j): 1 for j in range(6)})
    assert len(truncate(v, WeightWindow(1, 3))) == 3
    with pytest.raises(MalformedInput):
        WeightWindow(2, 1)


def test_integrity_error_is_arithmetic():
    assert issubclass(IntegrityError, ArithmeticError)
