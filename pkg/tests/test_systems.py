import json

import pytest

from peo.systems import (FAMILIES, SeriesId, apply_forward_equations, apply_symmetry, build_system,
                         expected_size, representative, stats)
from peo.words import EMPTY, Word, is_valid

SIZES = {
    "subset": [5, 21, 77, 279],
    "prime_subset": [6, 30, 114, 418],
    "superset": [3, 15, 57, 209],
    "prime_superset": [4, 22, 88, 328],
}


@pytest.mark.parametrize("family", FAMILIES)
def test_system_sizes(family):
    for k, n in enumerate(SIZES[family], start=1):
        s = build_system(family, k)
        assert len(s) == n == expected_size(family, k)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_systems_are_closed(family, k):
    s = build_system(family, k)
    assert s.dangling() == []
    assert s.root() in s.equations
    assert all(is_valid(sid.word, k) for sid in s.equations)


def test_bivariate_only_for_supersets():
    assert not build_system("subset", 2).bivariate
    assert not build_system("prime_subset", 2).bivariate
    assert build_system("superset", 2).bivariate
    assert build_system("prime_superset", 2).bivariate


def test_subset_k1_series_names():
    s = build_system("subset", 1)
    assert stats(s) == {"K": 2, "L": 3}
    assert {str(x) for x in s.equations} == {"K_10", "K_01", "L_ε", "L_0", "L_1"}


@pytest.mark.parametrize("family", FAMILIES)
def test_symmetry_roughly_halves(family):
    s = build_system(family, 3)
    r = apply_symmetry(s)
    assert r.symmetry_reduced and r.dangling() == []
    assert len(s) / 2 <= len(r) <= len(s) / 2 + 3
    for sid in r.equations:
        assert representative(sid) == sid


def test_forward_must_precede_symmetry():
    with pytest.raises(ValueError):
        apply_forward_equations(apply_symmetry(build_system("subset", 2)))


def test_forward_equation_shape():
    s = apply_forward_equations(build_system("subset", 2))
    assert s.forward
    rhs = s.equations[SeriesId("L", EMPTY)]
    refs = {str(f[0]) for t in rhs for f in getattr(t, "factors", ())}
    assert refs == {"L_0", "L_1"}


@pytest.mark.parametrize("family", FAMILIES)
def test_json_roundtrip(family):
    s = build_system(family, 2, symmetry=True, forward=True)
    back = type(s).from_json(json.loads(json.dumps(s.to_json())))
    assert back.equations == s.equations
    assert back.pretty() == s.pretty()


def test_family_name_spelling_and_errors():
    assert len(build_system("prime-subset", 1)) == 6
    with pytest.raises(ValueError):
        build_system("nope", 1)
    with pytest.raises(ValueError):
        SeriesId("Z", EMPTY)


def test_series_id_text():
    assert str(SeriesId("L'", Word.from_str("01"))) == "L'_01"
    assert SeriesId("U", EMPTY).bivariate and not SeriesId("K", EMPTY).bivariate
