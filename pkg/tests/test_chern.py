from itertools import combinations
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enumerica.chern import (
    SymPoly2,
    hypersurface_tangent_chern,
    projective_tangent_chern,
    sym_chern,
    sym_total_chern,
    symmetric_to_elementary,
)


def test_sym_cube_top_class():
    assert sym_chern(3, 4) == SymPoly2({(2, 1): 18, (0, 2): 9})
    assert str(sym_chern(3, 4)) == "18*c1^2*c2 + 9*c2^2"


def test_sym_first_power_is_the_bundle():
    assert sym_chern(1, 0) == SymPoly2({(0, 0): 1})
    assert sym_chern(1, 1) == SymPoly2({(1, 0): 1})
    assert sym_chern(1, 2) == SymPoly2({(0, 1): 1})


def test_sym_square_known_classes():
    # Sym^2 E has roots 2a, a+b, 2b
    assert sym_chern(2, 1) == SymPoly2({(1, 0): 3})
    assert sym_chern(2, 3) == SymPoly2({(1, 1): 4})


def test_sym_chern_ranges():
    with pytest.raises(ValueError):
        sym_chern(0, 0)
    with pytest.raises(ValueError):
        sym_chern(3, 5)
    assert len(sym_total_chern(4)) == 6


def test_sym_chern_is_homogeneous():
    for d in range(1, 7):
        for i in range(d + 2):
            assert sym_chern(d, i).degrees() <= {i}


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(-9, 9), st.integers(-9, 9), st.data())
def test_sym_chern_matches_roots(d, a, b, data):
    i = data.draw(st.integers(0, d + 1))
    roots = [k * a + (d - k) * b for k in range(d + 1)]
    elementary = sum(prod(c) for c in combinations(roots, i))
    assert sym_chern(d, i).evaluate(a + b, a * b) == elementary


def test_symmetric_to_elementary_rejects_asymmetric():
    with pytest.raises(ArithmeticError):
        symmetric_to_elementary({(0, 1): 1})


def test_projective_tangent():
    assert projective_tangent_chern(3) == [1, 4, 6, 4]


def test_quintic_threefold_tangent():
    assert hypersurface_tangent_chern(4, 5) == [1, 0, 10, -40]


def test_cubic_surface_tangent():
    # c2 of a cubic surface is its Euler number 9 = 3 * 3
    assert hypersurface_tangent_chern(3, 3) == [1, 1, 3]


@pytest.mark.parametrize("r", range(2, 9))
def test_first_chern_class_vanishes_only_for_calabi_yau(r):
    for d in range(1, 11):
        assert (hypersurface_tangent_chern(r, d)[1] == 0) == (d == r + 1)


def test_hypersurface_ranges():
    with pytest.raises(ValueError):
        hypersurface_tangent_chern(1, 2)
    with pytest.raises(ValueError):
        hypersurface_tangent_chern(3, 0)
