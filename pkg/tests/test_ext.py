import numpy as np
import pytest

from conftest import ideal
from regdim.algebra.linalg import is_invertible
from regdim.exceptions import InputError, UnitIdealError
from regdim.homology.ext import (
    DegreeBox,
    build_ext_module,
    determined_box,
    evaluate_at_degree,
    ext_multiplication_map,
    hilbert_function,
    is_finite_length,
    iso_chain,
    module_map,
    representative,
)


def test_determined_box_examples(square, hypersurface, mixed_powers):
    assert determined_box(square) == DegreeBox(lower=(-1,), upper=(1,))
    assert determined_box(hypersurface) == DegreeBox(lower=(0, 0), upper=(1, 1))
    assert determined_box(ideal((1, 1, 0), (0, 1, 1))).lower == (0, 0, 0)
    assert determined_box(mixed_powers) == DegreeBox(lower=(-1, -2), upper=(1, 1))
    with pytest.raises(UnitIdealError):
        determined_box(ideal((0, 0)))


def test_degree_box_shell_and_growth():
    box = DegreeBox(lower=(-1, 0), upper=(1, 1))
    assert box.shell(0) == [(-2, 0), (-2, 1)]
    assert box.shell(1) == [(-1, -1), (0, -1), (1, -1)]
    assert box.grown([1]).lower == (-1, -1)
    assert box.extended(below=1, above=2) == DegreeBox(lower=(-2, -1), upper=(3, 3))
    with pytest.raises(ValueError):
        DegreeBox(lower=(2,), upper=(1,))


def test_ext_of_residue_field(maximal_2):
    module = build_ext_module(maximal_2, 2)
    assert hilbert_function(module) == [((0, 0), 1)]
    assert module.dims[(1, 1)] == 0


def test_ext_of_square(square):
    module = build_ext_module(square, 1)
    assert module.dims == {(-1,): 1, (0,): 1, (1,): 0}
    assert module.mult[((-1,), 0)].tolist() == [[1]]
    assert is_finite_length(module)
    assert build_ext_module(square, 0).is_zero


def test_ext_of_principal_ideal(principal_x1):
    module = build_ext_module(principal_x1, 1)
    assert module.dims[(0, 1)] == 1
    assert module.dims[(0, 0)] == 0
    assert module.dims[(1, 1)] == 0
    assert module.determinedness_checks > 0
    top = ext_multiplication_map(principal_x1, 1, (0, 1), 1)
    assert top.tolist() == [[1]]
    assert is_invertible(top, module.field)
    assert not is_finite_length(module)
    assert build_ext_module(principal_x1, 2).is_zero


def test_ext_of_hypersurface(hypersurface):
    module = build_ext_module(hypersurface, 1)
    assert hilbert_function(module) == [((0, 0), 1), ((0, 1), 1), ((1, 0), 1)]


def test_canonical_module_of_polynomial_ring(zero_1):
    module = build_ext_module(zero_1, 0)
    assert module.dims == {(0,): 0, (1,): 1}
    assert evaluate_at_degree(module, (9,)) == 1
    assert evaluate_at_degree(module, (-4,)) == 0


def test_evaluation_outside_the_box(principal_x1):
    module = build_ext_module(principal_x1, 1)
    assert evaluate_at_degree(module, (0, 7)) == 1
    assert evaluate_at_degree(module, (3, 7)) == 0
    assert evaluate_at_degree(module, (-1, 7)) == 0
    assert representative(module, (0, 7)) == (0, 1)
    assert representative(module, (-1, 7)) is None
    chain = iso_chain(module, (0, 7))
    assert len(chain) == 6
    assert chain[0] == ((0, 1), 1)
    assert iso_chain(module, (-1, 0)) == []


def test_module_map_outside_the_box(principal_x1):
    module = build_ext_module(principal_x1, 1)
    assert module_map(module, (0, 3), 1).tolist() == [[1]]
    assert module_map(module, (0, 0), 1).shape == (1, 0)
    assert module_map(module, (0, 3), 0).shape == (0, 1)
    assert module_map(module, (-5, -5), 0).shape == (0, 0)


def test_small_ideals_need_no_box_growth(small_ideal):
    for i in range(small_ideal.n + 1):
        module = build_ext_module(small_ideal, i)
        assert module.grown_coordinates == []
        for (a, j), matrix in module.mult.items():
            assert matrix.shape == (module.dims[tuple(x + (k == j) for k, x in enumerate(a))], module.dims[a])


def test_multiplication_above_the_box_is_bijective(small_ideal):
    for i in range(small_ideal.n + 1):
        module = build_ext_module(small_ideal, i)
        for a in module.box.degrees():
            for j in range(small_ideal.n):
                if a[j] >= 1:
                    matrix = ext_multiplication_map(small_ideal, i, a, j)
                    assert is_invertible(matrix, module.field)


def test_ext_index_checked(square):
    with pytest.raises(InputError):
        build_ext_module(square, 2)
    with pytest.raises(UnitIdealError):
        build_ext_module(ideal((0,)), 0)


def test_characteristic_does_not_change_small_modules(mixed_powers, gf2, gf3):
    for i in range(3):
        assert build_ext_module(mixed_powers, i, gf2).dims == build_ext_module(mixed_powers, i, gf3).dims


def test_modules_above_n_minus_grade_vanish(small_ideal):
    used = len(small_ideal.variables_used())
    for i in range(small_ideal.n + 1):
        module = build_ext_module(small_ideal, i)
        if i > used or i == 0:
            assert module.is_zero
        assert all(np.all(m >= 0) for m in module.mult.values())
