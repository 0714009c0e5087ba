import pytest
from hypothesis import given, settings, strategies as st

from peo.series import (TruncSeries, XPoly, XSeries, divided_difference, divided_difference_poly,
                        eval_x1, poly_eval, poly_mul)

coeff_lists = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=0, max_size=12)


@settings(max_examples=1000, deadline=None)
@given(coeff_lists, st.integers(0, 14))
def test_divided_difference_identity(p, k):
    q = divided_difference_poly(p, k)
    lhs = poly_mul([-1, 1], q)
    rhs = list(p) + [0] * max(0, k + 1 - len(p))
    rhs[k] -= sum(p)
    while rhs and rhs[-1] == 0:
        rhs.pop()
    assert lhs == rhs


@given(coeff_lists, st.integers(0, 6))
def test_divided_difference_at_one_is_derivative_like(p, k):
    # (x-1) DD = p(x) - x^k p(1)  =>  DD(1) = p'(1) - k p(1)
    q = divided_difference(XPoly(p), k)
    deriv = sum(i * c for i, c in enumerate(p))
    assert q(1) == deriv - k * sum(p)


def test_divided_difference_small_cases():
    assert divided_difference(XPoly([0, 1]), 0) == XPoly([1])     # (x - 1)/(x - 1)
    assert divided_difference(XPoly([5]), 0) == XPoly([])
    assert divided_difference(XPoly([0, 0, 1]), 1) == XPoly([0, 1])


def test_xpoly_arithmetic():
    a, b = XPoly([1, 2]), XPoly([0, 1])
    assert a + b == XPoly([1, 3])
    assert a * b == XPoly([0, 1, 2])
    assert (a - a).coeffs == ()
    assert a(2) == 5
    assert 3 * a == XPoly([3, 6])


def test_trunc_series_catalan():
    # C = 1 + t C^2 determines the Catalan numbers
    N = 12
    c = TruncSeries.one(N)
    for _ in range(N + 1):
        c = 1 + (c * c).shift(1)
    assert list(c) == [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012]


def test_trunc_series_orders_must_match():
    with pytest.raises(ValueError):
        TruncSeries([1, 2], 3) + TruncSeries([1], 2)


def test_trunc_series_json_roundtrip():
    s = TruncSeries([1, 2, 10 ** 30])
    assert s.to_json() == ["1", "2", str(10 ** 30)]
    assert TruncSeries.from_json(s.to_json()) == s


def test_xseries_products_and_eval():
    s = XSeries([XPoly([1]), XPoly([0, 1]), XPoly([1, 1])])
    sq = s * s
    assert eval_x1(sq) == eval_x1(s) * eval_x1(s)
    assert s.xshift(2)[1] == XPoly([0, 0, 0, 1])
    assert XSeries.from_json(s.to_json()) == s
    dd = s.divided_difference(1)
    for n in range(3):
        assert poly_eval(poly_mul([-1, 1], list(dd[n].coeffs)), 3) == s[n](3) - 3 * s[n](1)


@given(st.lists(st.integers(-50, 50), min_size=4, max_size=4),
       st.lists(st.integers(-50, 50), min_size=4, max_size=4))
def test_series_product_commutes(a, b):
    A, B = TruncSeries(a), TruncSeries(b)
    assert A * B == B * A
    assert (A + B) * A == A * A + B * A
