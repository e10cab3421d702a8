import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmw import vector_fields as vf
from cmw.core import FormalSum, MalformedInput

idx = st.integers(-1, 6)


@given(idx, idx)
def test_antisymmetry(p, q):
    assert vf.bracket(vf.e(p), vf.e(q)) == -vf.bracket(vf.e(q), vf.e(p))


@given(idx, idx, idx)
def test_jacobi(p, q, r):
    a, b, c = vf.e(p), vf.e(q), vf.e(r)
    j = vf.bracket(a, vf.bracket(b, c)) + vf.bracket(b, vf.bracket(c, a)) + vf.bracket(c, vf.bracket(a, b))
    assert j == 0


@pytest.mark.parametrize("p,q,expected", [(-1, 0, vf.e(-1, 1)), (0, 1, vf.e(1, 1)), (1, 2, vf.e(3, 1)),
                                          (-1, -1, FormalSum())])
def test_w1_bracket(p, q, expected):
    assert vf.bracket_w1(p, q) == expected


@given(idx, idx, st.sampled_from([("x", 0), ("x", 2), ("f", 0), ("f", 3)]))
def test_forms_are_a_lie_module(p, q, k):
    w = FormalSum.basis(k)
    lhs = vf.act_on_forms(vf.bracket(vf.e(p), vf.e(q)), w)
    rhs = vf.act_on_forms(vf.e(p), vf.act_on_forms(vf.e(q), w)) - vf.act_on_forms(vf.e(q), vf.act_on_forms(vf.e(p), w))
    assert lhs == rhs


@given(st.integers(1, 6), st.sampled_from([-1, 0]))
def test_matched_pair_splits_bracket(p, i):
    l, r = vf.matched_pair(vf.e(p), vf.e(i))
    assert l + r == vf.bracket(vf.e(p), vf.e(i))
    assert all(vf.in_s(k[1]) for k in l.keys()) and all(vf.in_n(k[1]) for k in r.keys())


def test_matched_pair_rejects_wrong_sides():
    with pytest.raises(MalformedInput):
        vf.matched_pair(vf.e(0), vf.e(1))


mono = st.lists(st.integers(1, 3), max_size=3)


@given(st.integers(1, 3), mono, st.integers(1, 3), mono, st.integers(1, 3), mono)
def test_wn_jacobi(i, A, j, B, k, C):
    n = 3
    a, b, c = (FormalSum.basis(vf.wn_elem(*t, n=n)) for t in ((i, A), (j, B), (k, C)))
    br = lambda u, v: vf.bracket_wn_sum(u, v, n)
    assert br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)) == 0


@given(st.integers(0, 4), st.integers(0, 4))
def test_wn_restricts_to_w1(m1, m2):
    a, b = vf.wn_elem(1, (1,) * m1), vf.wn_elem(1, (1,) * m2)
    br = vf.bracket_wn(a, b, 1).map_keys(vf.wn_to_w1)
    assert br == vf.bracket_w1(m1 - 1, m2 - 1)


def test_wn_index_check():
    with pytest.raises(MalformedInput):
        vf.wn_elem(3, (1,), n=2)
