import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enumerica.localization import (
    LocalizationError,
    WeightVector,
    euler_char,
    fixed_points,
    lines_via_localization,
    localized_sum,
    parse_space,
    sym_euler,
    tangent_euler,
)


def test_fixed_points_of_gr24():
    assert fixed_points(2, 4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(ValueError):
        fixed_points(0, 3)


def test_tangent_euler_example():
    assert tangent_euler((1, 2), WeightVector([0, 1, 2, 3])) == 12


def test_sym_euler_example():
    # weights 3*2, 1 + 2*2, 2*1 + 2, 3*1
    assert sym_euler((1, 2), 3, WeightVector([1, 2, 3, 4])) == 360
    with pytest.raises(ValueError):
        sym_euler((1, 2, 3), 3, WeightVector([1, 2, 3, 4]))


def test_weights_must_be_distinct():
    with pytest.raises(ValueError):
        WeightVector([1, 2, 2])
    with pytest.raises(TypeError):
        WeightVector([0.5, 1])


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 27), (5, 2875), (6, 698005)])
def test_lines(n, expected):
    assert lines_via_localization(n, trials=5, seed=n) == expected


def test_lines_rejects_bad_input():
    with pytest.raises(ValueError):
        lines_via_localization(2)
    with pytest.raises(ValueError):
        lines_via_localization(4, trials=1)


def test_wrong_degree_is_weight_dependent():
    # Sym^5 on Gr(2,4) has rank 6 > 4, so the sum is not a constant
    a = localized_sum(4, WeightVector([1, 2, 3, 5]), d=5)
    b = localized_sum(4, WeightVector([1, 2, 3, 7]), d=5)
    assert a != b


def test_inconsistent_trials_raise(monkeypatch):
    import enumerica.localization as loc

    counter = iter(range(100))
    monkeypatch.setattr(loc, "localized_sum", lambda n, w: Fraction(next(counter)))
    with pytest.raises(LocalizationError):
        loc.lines_via_localization(4)


def test_non_integral_sum_raises(monkeypatch):
    import enumerica.localization as loc

    monkeypatch.setattr(loc, "localized_sum", lambda n, w: Fraction(1, 2))
    with pytest.raises(LocalizationError):
        loc.lines_via_localization(4)


distinct_weights = st.lists(st.integers(-10**6, 10**6), min_size=5, max_size=5, unique=True)


@settings(max_examples=100, deadline=None)
@given(distinct_weights)
def test_weight_independence(ws):
    assert localized_sum(5, WeightVector(ws)) == 2875


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=4, max_size=4, unique=True), st.integers(-9, 9).filter(bool))
def test_scale_invariance(ws, c):
    w = WeightVector(ws)
    assert localized_sum(4, w.scaled(c)) == localized_sum(4, w) == 27


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=4, max_size=4, unique=True), st.permutations(range(4)))
def test_permutation_invariance(ws, perm):
    w = WeightVector(ws)
    assert localized_sum(4, w.permuted(perm)) == localized_sum(4, w)


def test_seeded_runs_are_reproducible():
    rng1, rng2 = random.Random(3), random.Random(3)
    from enumerica.localization import random_weights

    assert random_weights(5, rng1) == random_weights(5, rng2)


@pytest.mark.parametrize(
    "space,chi",
    [("P^3", 4), ("P5", 6), ("Gr(2,4)", 6), ("Gr(3,6)", 20), ("Fl(4)", 24), ("T^2", 0)],
)
def test_euler_characteristics(space, chi):
    assert euler_char(space) == chi


@pytest.mark.parametrize("n", range(1, 8))
def test_flag_euler(n):
    from math import factorial

    assert euler_char(f"Fl({n})") == factorial(n)


def test_parse_space_errors():
    with pytest.raises(ValueError):
        parse_space("Q^3")
