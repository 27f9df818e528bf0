import pytest
from pydantic import ValidationError

from regdim.algebra.monomials import minimalize
from regdim.corpus import CorpusSpec, enumerate_ideals, named_example, named_example_table, named_examples
from regdim.exceptions import InputError


def _count(**kwargs) -> int:
    return sum(1 for _ in enumerate_ideals(CorpusSpec(**kwargs)))


def test_exhaustive_counts():
    assert _count(n=1, max_exponent=2) == 3
    assert _count(n=2, max_exponent=1) == 5
    assert _count(n=2, max_exponent=2) == 19
    assert _count(n=4, squarefree=True) == 167


def test_exhaustive_n1_closed_form():
    for e in (1, 2):
        assert _count(n=1, max_exponent=e) == e + 1


def test_exhaustive_three_variables_count():
    assert _count(n=3, max_exponent=2) == 979


def test_squarefree_two_variables():
    gens = [ideal.gens for ideal in enumerate_ideals(CorpusSpec(n=2, squarefree=True))]
    assert gens == [(), ((0, 1),), ((0, 1), (1, 0)), ((1, 0),), ((1, 1),)]


def test_exhaustive_ideals_are_minimal_and_proper():
    for ideal in enumerate_ideals(CorpusSpec(n=2, max_exponent=2)):
        assert minimalize(ideal.gens, ideal.n) == ideal
        assert not ideal.is_unit


def test_exhaustive_bounds():
    with pytest.raises(InputError):
        list(enumerate_ideals(CorpusSpec(n=4, max_exponent=2)))
    with pytest.raises(InputError):
        list(enumerate_ideals(CorpusSpec(n=3, max_exponent=3)))
    with pytest.raises(InputError):
        list(enumerate_ideals(CorpusSpec(n=5, squarefree=True)))


def test_corpus_spec_validation():
    with pytest.raises(ValidationError):
        CorpusSpec(n=0)
    with pytest.raises(ValidationError):
        CorpusSpec(n=2, seed=2**64)
    assert CorpusSpec(n=2, seed=2**64 - 1).seed == 2**64 - 1


def test_random_stream_is_reproducible():
    spec = CorpusSpec(n=3, max_exponent=3, mode="random", samples=20, seed=12345)
    first = list(enumerate_ideals(spec))
    second = list(enumerate_ideals(spec))
    assert first == second
    assert len(first) == 20
    assert len(set(first)) == 20
    assert not any(ideal.is_unit for ideal in first)
    assert all(len(ideal.gens) <= spec.max_generators for ideal in first)


def test_random_seed_changes_stream():
    base = dict(n=3, max_exponent=3, mode="random", samples=10)
    assert list(enumerate_ideals(CorpusSpec(seed=1, **base))) != list(enumerate_ideals(CorpusSpec(seed=2, **base)))


def test_random_squarefree_stream():
    spec = CorpusSpec(n=4, max_exponent=3, squarefree=True, mode="random", samples=15, seed=9)
    assert all(ideal.is_squarefree for ideal in enumerate_ideals(spec))


def test_named_examples():
    table = {example.name: example.ideal for example in named_example_table()}
    plane = table["projective_plane"]
    assert plane.n == 6
    assert len(plane.gens) == 10
    assert plane.is_squarefree
    assert all(sum(g) == 3 for g in plane.gens)
    ideals = named_examples()
    assert minimalize([(1, 0), (0, 1)]) in ideals
    assert minimalize([(2,)]) in ideals
    assert named_example("square") == minimalize([(2,)])
    with pytest.raises(InputError):
        named_example("klein_bottle")
