import json

import pytest

from peo.golden import EULERIAN_MAPS, O_N, TABLE1
from peo.oracle import (ATOMIC, ATOMIC_ORIENTED, RotationMap, brute_family_counts,
                        brute_orientations, concat, eulerian_maps_count, family_generator,
                        forced_letter, generate_eulerian_maps, loop_around, maps_series, merge,
                        split)
from peo.solver import root_series
from peo.words import Word


def test_closed_form_map_counts():
    assert [eulerian_maps_count(n) for n in range(8)] == EULERIAN_MAPS


@pytest.mark.parametrize("n", range(6))
def test_generated_maps_are_valid_and_distinct(n):
    maps = generate_eulerian_maps(n)
    assert len(maps) == eulerian_maps_count(n)
    assert len({m.code() for m in maps}) == len(maps)
    for m in maps:
        m.check()
        assert m.is_eulerian_map()
        assert m.n_edges == n


def test_single_loop():
    m = merge(ATOMIC_ORIENTED, ATOMIC_ORIENTED, 1)
    m.check()
    assert m.n_edges == 1 and m.root_degree() == 2
    assert str(m.root_word()) == "10"
    assert m.is_eulerian_orientation()


def test_concat_and_loop_around_degrees():
    loop = loop_around(ATOMIC)
    two = concat(loop, loop)
    two.check()
    assert two.root_degree() == 4
    assert loop_around(two).root_degree() == 6


def test_split_shapes():
    m = concat(loop_around(ATOMIC_ORIENTED, 1), loop_around(ATOMIC_ORIENTED, 0))
    w = m.root_word()
    s = split(m, 1, forced_letter(w.suffix(1)))
    s.check()
    assert s.n_edges == 3 and s.root_degree() == 2
    assert s.is_eulerian_orientation()
    with pytest.raises(ValueError):
        split(m, 3, 0)


def test_forced_letter():
    assert forced_letter(Word.from_str("0")) == 1
    assert forced_letter(Word.from_str("101")) == 0


def test_json_roundtrip():
    for m in generate_eulerian_maps(3):
        d = json.loads(json.dumps(m.to_json()))
        assert RotationMap.from_json(d) == m
        assert d["opposite"] == [h ^ 1 for h in range(2 * m.n_edges)]


def test_brute_orientations_small():
    assert [brute_orientations(n) for n in range(6)] == O_N[:6]


@pytest.mark.parametrize("family", ["subset", "prime_subset", "superset", "prime_superset"])
@pytest.mark.parametrize("k", [1, 2])
def test_family_generators_match_solver(family, k):
    assert brute_family_counts(family, k, 4) == root_series(family, k, 4)


def test_family_codes_inclusions():
    for n in range(5):
        for k in (1, 2):
            L, LL = family_generator("L", k).codes(n), family_generator("LL", k).codes(n)
            U, UU = family_generator("U", k).codes(n), family_generator("UU", k).codes(n)
            assert L <= LL and UU <= U
        assert family_generator("UU", 1).codes(n) == family_generator("U", 1).codes(n)


def test_subset_family_members_are_eulerian_orientations():
    for m in family_generator("LL", 2).all(4):
        m.check()
        assert m.is_eulerian_orientation()


def test_family_rejects_bad_input():
    with pytest.raises(ValueError):
        family_generator("X", 1)
    with pytest.raises(ValueError):
        family_generator("L", 0)


@pytest.mark.parametrize("method", ["standard_eq", "prime_eq"])
def test_map_equations_reproduce_counts(method):
    m1, _ = maps_series(7, method)
    assert list(m1) == EULERIAN_MAPS
    assert list(maps_series(7)) == EULERIAN_MAPS
