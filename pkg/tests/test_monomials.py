import pytest

from conftest import ideal
from regdim.algebra.monomials import (
    MonomialIdeal,
    contains,
    faces,
    localized_nonzero,
    minimalize,
    negative_part,
    positive_part,
    rho,
    split_degree,
    sub_degrees,
    support,
    total_degree,
)
from regdim.exceptions import InputError, UnitIdealError


def test_minimalize_drops_multiples():
    assert minimalize([(2,), (3,)]).gens == ((2,),)
    assert minimalize([(1, 1, 0), (0, 2, 0), (2, 1, 0)]).gens == ((0, 2, 0), (1, 1, 0))


def test_minimalize_zero_ideal_needs_n():
    zero = minimalize([], n=2)
    assert zero.is_zero
    assert zero.n == 2
    with pytest.raises(InputError):
        minimalize([])


def test_minimalize_rejects_bad_vectors():
    with pytest.raises(InputError):
        minimalize([(1, 0), (1,)])
    with pytest.raises(InputError):
        minimalize([(1, -1)])
    with pytest.raises(InputError):
        minimalize([(1, 0)], n=3)


def test_minimalize_is_idempotent_and_order_insensitive():
    raw = [(0, 2, 1), (1, 1, 1), (0, 2, 0), (3, 0, 0), (1, 1, 2)]
    first = minimalize(raw)
    assert minimalize(reversed(raw)) == first
    assert minimalize(first.gens) == first


def test_ideal_model_rejects_non_minimal_generators():
    with pytest.raises(ValueError):
        MonomialIdeal(n=1, gens=((2,), (3,)))
    with pytest.raises(ValueError):
        MonomialIdeal(n=2, gens=((1, 0), (0, 1)))


def test_ideal_properties():
    unit = ideal((0, 0))
    assert unit.is_unit
    with pytest.raises(UnitIdealError, match="unit ideal not supported"):
        unit.require_proper()
    assert ideal((1, 1), (0, 1)).gens == ((0, 1),)
    assert ideal((1, 1, 0), (0, 1, 1)).is_squarefree
    assert not ideal((2, 0)).is_squarefree
    assert ideal((1, 0, 0), (0, 0, 3)).variables_used() == (0, 2)
    assert str(ideal((2, 0, 1), (0, 1, 0))) == "(x2, x1^2*x3)"


def test_contains():
    assert not contains(ideal((2,)), (1,))
    assert contains(ideal((2,)), (5,))
    assert contains(ideal((1, 1), (0, 2)), (0, 2))


def test_localized_nonzero_examples():
    assert not localized_nonzero(ideal((2,)), (0,), (-3,))
    assert localized_nonzero(ideal((1, 1)), (0,), (-2, 0))
    assert not localized_nonzero(ideal((1, 1)), (0,), (-2, 1))


def test_localized_nonzero_requires_negative_support_inverted():
    assert not localized_nonzero(MonomialIdeal(n=2), (), (-1, 0))
    assert localized_nonzero(MonomialIdeal(n=2), (0,), (-1, 0))


def test_inverting_every_variable_kills_nonzero_ideals():
    for a in [(0, 0), (-3, 2), (5, -1)]:
        assert localized_nonzero(MonomialIdeal(n=2), (0, 1), a)
        assert not localized_nonzero(ideal((3, 4)), (0, 1), a)


def test_localized_nonzero_ignores_inverted_coordinates():
    i = ideal((2, 1, 0), (0, 1, 3))
    face = (0, 2)
    for a in [(0, 0, 0), (1, 0, 2), (-2, 1, -1)]:
        expected = localized_nonzero(i, face, a)
        for bump in (-3, 4):
            moved = (a[0] + bump, a[1], a[2] - bump)
            assert localized_nonzero(i, face, moved) == expected


def test_rho():
    assert rho(ideal((2, 1), (0, 3))) == (2, 3)
    assert rho(MonomialIdeal(n=2)) == (0, 0)
    assert rho(ideal((1, 1, 0), (0, 1, 1))) == (1, 1, 1)
    with pytest.raises(UnitIdealError):
        rho(ideal((0,)))


def test_multidegree_parts():
    a = (3, -2, 0, -1)
    plus, minus = split_degree(a)
    assert plus == positive_part(a) == (3, 0, 0, 0)
    assert minus == negative_part(a) == (0, 2, 0, 1)
    assert sub_degrees(plus, minus) == a
    assert not set(support(plus)) & set(support(minus))
    assert total_degree(a) == total_degree(plus) - total_degree(minus)


def test_faces_in_colex_order():
    assert faces(3) == [(), (0,), (1,), (0, 1), (2,), (0, 2), (1, 2), (0, 1, 2)]
    assert faces(3, 2) == [(0, 1), (0, 2), (1, 2)]
