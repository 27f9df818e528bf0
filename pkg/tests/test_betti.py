from regdim.filtration.betti import (
    BettiTable,
    betti_degree_range,
    koszul_betti,
    koszul_complex_at,
    koszul_euler_characteristic,
    minimal_generator_counts,
    regularity,
    regularity_witness,
)
from regdim.homology.ext import build_ext_module, is_finite_length


def test_betti_of_residue_field(maximal_2):
    table = koszul_betti(build_ext_module(maximal_2, 2))
    assert table.triples() == [
        (0, (0, 0), 1),
        (1, (0, 1), 1),
        (1, (1, 0), 1),
        (2, (1, 1), 1),
    ]
    assert regularity(table) == 0


def test_betti_of_square(square):
    table = koszul_betti(build_ext_module(square, 1))
    assert table.triples() == [(0, (-1,), 1), (1, (1,), 1)]
    assert regularity(table) == 0
    assert table[(1, (1,))] == 1
    assert table[(1, (0,))] == 0


def test_betti_of_principal_ideal(principal_x1):
    table = koszul_betti(build_ext_module(principal_x1, 1))
    assert table.triples() == [(0, (0, 1), 1), (1, (1, 1), 1)]
    assert regularity(table) == 1
    assert regularity_witness(table) == (0, (0, 1))


def test_betti_of_canonical_module(zero_1):
    table = koszul_betti(build_ext_module(zero_1, 0))
    assert table.triples() == [(0, (1,), 1)]
    assert regularity(table) == 1


def test_empty_table_has_no_regularity():
    table = BettiTable(n=2)
    assert table.is_empty
    assert regularity(table) is None
    assert regularity_witness(table) is None


def test_koszul_slice_shape(maximal_2):
    module = build_ext_module(maximal_2, 2)
    complex_ = koszul_complex_at(module, (1, 1))
    # spaces K_2, K_1, K_0 in degree (1, 1)
    assert complex_.dims == (1, 0, 0)


def test_generators_euler_and_finite_length(small_ideal):
    for i in range(small_ideal.n + 1):
        module = build_ext_module(small_ideal, i)
        table = koszul_betti(module)
        assert minimal_generator_counts(module) == table.row(0)
        for a in betti_degree_range(module):
            alternating = sum((-1) ** k * b for (k, c), b in table.entries.items() if c == a)
            assert alternating == koszul_euler_characteristic(module, a)
        if not module.is_zero and is_finite_length(module):
            assert regularity(table) <= 0
            top = max(sum(a) for a, d in module.dims.items() if d)
            assert regularity(table) == top
