import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from peo.analysis import (CATALOGUE, DELTA1, DELTA2_FACTOR, SERIES_EQUATIONS, TAU1, PolyT,
                          bounds_report, constant_multiple, count_roots, discriminant_y,
                          estimate_growth, exact_divide, fekete_lower_bound, format_poly,
                          format_report, get_equation, growth_from_polynomial, parse_poly,
                          resultant_y, root_isolate, supermultiplicative_violations,
                          verify_algebraic)
from peo.golden import O_N, TABLE1
from peo.oracle import maps_series

T, Y = sympy.symbols("t y")


def to_sympy(p):
    return sum(c * T ** i * Y ** j for (i, j), c in p.coeffs.items())


def test_parse_expands_products():
    p = parse_poly("(t-1)*(y+2)**2")
    assert p.coeffs == {(1, 2): 1, (0, 2): -1, (1, 1): 4, (0, 1): -4, (1, 0): 4, (0, 0): -4}
    with pytest.raises(ValueError):
        parse_poly("t/2")
    with pytest.raises(ValueError):
        parse_poly("z + 1")


@pytest.mark.parametrize("family,k,eq", SERIES_EQUATIONS)
def test_catalogue_membership(series, family, k, eq):
    chk = verify_algebraic(list(series(family, k, 30)), CATALOGUE[eq])
    assert chk.holds and str(chk) == "holds through 30"


def test_maps_quadratic():
    assert verify_algebraic(maps_series(30), CATALOGUE["maps"]).holds


def test_wrong_equation_fails_early(series):
    chk = verify_algebraic(list(series("subset", 1, 20)), CATALOGUE["subset2"])
    assert not chk.holds and chk.first_failure <= 10
    assert str(chk).startswith("fails at n=")


def test_aliases():
    assert get_equation("eq3") is CATALOGUE["subset1"]
    assert get_equation("EQ11") is CATALOGUE["prime_subset2"]
    with pytest.raises(KeyError):
        get_equation("eq99")


@pytest.mark.parametrize("name", sorted(CATALOGUE))
def test_discriminant_matches_sympy(name):
    p = CATALOGUE[name]
    ours = sympy.Poly(list(reversed(discriminant_y(p).coeffs)), T)
    ref = sympy.Poly(sympy.discriminant(to_sympy(p), Y), T)
    assert ours == ref


def test_discriminant_conventions():
    assert discriminant_y(parse_poly("y**2 - t")).coeffs == (0, 4)
    assert discriminant_y(parse_poly("y**3 + t*y + 1")).coeffs == (-27, 0, 0, -4)
    with pytest.raises(ValueError):
        discriminant_y(parse_poly("t*y + 1"))


def test_reference_discriminant_factors():
    assert constant_multiple(discriminant_y(CATALOGUE["subset1"]).coeffs, DELTA1.coeffs) == 1
    q = exact_divide(discriminant_y(CATALOGUE["subset2"]).coeffs, DELTA2_FACTOR.coeffs)
    assert q == [0] * 12 + [-64, 64]      # 64 t^12 (t - 1)


def test_resultant_of_coprime_linear_factors():
    # Res_y(y - t, y - 1) = t - 1 up to sign
    assert resultant_y(parse_poly("y - t"), parse_poly("y - 1")) in ([-1, 1], [1, -1])


def test_exact_divide_rejects_remainder():
    with pytest.raises(ArithmeticError):
        exact_divide([1, 0, 1], [1, 1])


@pytest.mark.parametrize("poly,roots", [
    (DELTA1, [0.1032, 0.3998]),
    (TAU1, [0.0765]),
    (DELTA2_FACTOR, [0.0984, 0.2714]),
])
def test_root_isolation(poly, roots):
    rs = root_isolate(poly, 0, 1, 1e-9)
    # printed values carry four digits, some rounded and some truncated
    assert len(rs) == len(roots)
    assert all(abs(r.mid - v) < 1e-4 for r, v in zip(rs, roots))
    for r in rs:
        assert r.width <= Fraction(1, 10 ** 9)
        assert r.lo == r.hi or poly(r.lo) * poly(r.hi) < 0


def test_growth_from_radius_window():
    assert abs(growth_from_polynomial(DELTA1) - 9.684) < 1e-3
    assert abs(growth_from_polynomial(DELTA2_FACTOR) - 10.16) < 1e-2
    assert abs(growth_from_polynomial(TAU1) - 13.0659) < 1e-3
    # both roots of (t - 1/10)(t - 1/9) fall in the window: all candidates are reported
    cands = growth_from_polynomial(PolyT((1, -19, 90)))
    assert sorted(round(c, 6) for c in cands) == [9.0, 10.0]


def test_root_isolation_rejects_repeated_roots():
    with pytest.raises(ValueError, match="square-free"):
        root_isolate([1, -4, 4], 0, 1)          # (2t - 1)^2
    # a repeated root outside the interval is harmless
    assert len(root_isolate([-1, 0, 1, 0, 0], Fraction(1, 2), 2)) == 1   # t^2 (t^2 - 1)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=20), min_size=1,
                max_size=5, unique=True))
def test_root_isolation_finds_planted_roots(roots):
    p = [Fraction(1)]
    for r in roots:
        p = [(p[i - 1] if i else 0) - r * (p[i] if i < len(p) else 0) for i in range(len(p) + 1)]
    den = math.lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    found = root_isolate(ints, -4, 4, 1e-6)
    assert len(found) == len(roots)
    for iv, r in zip(found, sorted(roots)):
        assert iv.lo <= r <= iv.hi
    assert count_roots(ints, -4, 4) == len(roots)


def test_fekete_basics():
    b = fekete_lower_bound(O_N, 1)
    assert b.value == 2.0 and b.certified == 2 and b.supermultiplicative
    b15 = fekete_lower_bound(O_N, 15)
    assert abs(b15.value - 8.1455) < 1e-4
    assert b15.certified ** 15 <= O_N[15] < (b15.certified + Fraction(1, 10 ** 6)) ** 15


def test_fekete_flags_violations():
    b = fekete_lower_bound([1, 3, 5, 30], 3)
    assert not b.supermultiplicative and (1, 1) in b.violations
    assert supermultiplicative_violations(O_N) == []


def test_fekete_bounds_increase_for_prime_subsets(series):
    s = list(series("prime_subset", 1, 40))
    vals = [fekete_lower_bound(s, n).value for n in range(1, 41)]
    assert vals == sorted(vals) and vals[-1] < 10.603


def test_growth_geometric_is_exact():
    g = estimate_growth([3 ** n for n in range(10)])
    assert g.estimate == 3.0 and all(r == 3.0 for _, r in g.ratios)
    assert not g.rigorous
    with pytest.raises(ValueError):
        estimate_growth([1, 2, 3])


def test_growth_ratio_pairs():
    g = estimate_growth(O_N[:8])
    inv_n, ratio = g.ratios[0]
    assert inv_n == 1.0 and ratio == 5.0
    assert g.ratios_csv().startswith("inv_n,ratio\n1.0,5.0\n")


def test_report_layout():
    rows = bounds_report(7, 2, o_n=O_N[:8])
    names = [r.name for r in rows]
    assert names[0] == "Eulerian maps" and names[-1] == "Oriented Eulerian maps"
    assert names.index("Eulerian orientations") == 5
    for r in rows:
        if r.family is not None:
            assert r.counts == TABLE1[(r.family, r.k)]
            # equality with o_n through n = k + 2
            assert all(r.equal[: r.k + 2])
    assert "2*" in format_report(rows)


def test_format_poly():
    assert format_poly([1, -12, 22]) == "22t^2 - 12t + 1"
    assert format_poly([0, -1]) == "-t"
    assert str(PolyT((0,))) == "0"
