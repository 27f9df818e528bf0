"""
Taylor complex oracle for the Hilbert function of Ext^i(R/I, ω_R).

The Taylor complex resolves R/I with one free summand R(-lcm S) per subset S
of the minimal generators. Applying Hom(-, ω_R) with ω_R = R(-e_[n]) turns
each summand into R(lcm S - e_[n]), so in a fixed degree a the dual complex
is a complex of coordinate spaces, one per subset S with a + lcm S - 1 ≥ 0.
"""
import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from regdim.algebra.linalg import FiniteComplex, PrimeField, cohomology_dims, zeros
from regdim.algebra.monomials import ExponentVector, MonomialIdeal, Multidegree, sub_degrees
from regdim.exceptions import InputError
from regdim.homology.cech import DEFAULT_FIELD

logger = logging.getLogger("regdim_taylor")

DEFAULT_MAX_GENERATORS = 12


def lcm(vectors: Sequence[ExponentVector], n: int) -> ExponentVector:
    return tuple(max((v[j] for v in vectors), default=0) for j in range(n))


@dataclass(eq=False)
class TaylorComplex:
    """
    ``subsets[t]`` lists the t-subsets of generator positions (lexicographic)
    and ``degrees[S]`` is the exponent vector of lcm(S).
    """
    ideal: MonomialIdeal
    subsets: tuple[tuple[tuple[int, ...], ...], ...]
    degrees: dict

    @property
    def length(self) -> int:
        return len(self.ideal.gens)

    def boundary(self, subset: tuple[int, ...]) -> list[tuple[int, ExponentVector, tuple[int, ...]]]:
        """d(e_S) as (sign, monomial coefficient, S minus one generator) terms."""
        terms = []
        for k in range(len(subset)):
            face = subset[:k] + subset[k + 1:]
            coefficient = sub_degrees(self.degrees[subset], self.degrees[face])
            terms.append((-1 if k % 2 else 1, coefficient, face))
        return terms


def build_taylor_complex(ideal: MonomialIdeal, max_generators: int = DEFAULT_MAX_GENERATORS) -> TaylorComplex:
    """
    Raises:
        UnitIdealError: for the unit ideal
        InputError: if the ideal has more than max_generators generators
    """
    ideal.require_proper()
    g = len(ideal.gens)
    if g > max_generators:
        raise InputError(f"Taylor complex capped at {max_generators} generators, ideal has {g}")
    subsets = tuple(tuple(itertools.combinations(range(g), t)) for t in range(g + 1))
    degrees = {
        s: lcm([ideal.gens[k] for k in s], ideal.n)
        for level in subsets for s in level
    }
    return TaylorComplex(ideal=ideal, subsets=subsets, degrees=degrees)


def taylor_composition_vanishes(taylor: TaylorComplex) -> bool:
    """Check d∘d = 0 over R, monomial coefficients included."""
    for level in taylor.subsets[2:]:
        for subset in level:
            totals: dict = defaultdict(int)
            for sign, first, face in taylor.boundary(subset):
                for inner_sign, second, target in taylor.boundary(face):
                    monomial = tuple(x + y for x, y in zip(first, second))
                    totals[(target, monomial)] += sign * inner_sign
            if any(totals.values()):
                logger.error(f"Taylor boundary squares to nonzero on {subset}")
                return False
    return True


def dual_degree_complex(taylor: TaylorComplex, a: Sequence[int], field: PrimeField = DEFAULT_FIELD) -> FiniteComplex:
    """
    The degree-a slice of Hom(T, ω_R) as a cochain complex indexed by t = |S|.

    δ sends the dual of e_{S∖s_k} to (−1)^k times the dual of e_S whenever
    both summands are present in degree a.
    """
    present = [
        tuple(s for s in level if all(x + d - 1 >= 0 for x, d in zip(a, taylor.degrees[s])))
        for level in taylor.subsets
    ]
    differentials = []
    for t in range(len(present) - 1):
        rows = {s: r for r, s in enumerate(present[t + 1])}
        cols = {s: c for c, s in enumerate(present[t])}
        delta = zeros(len(present[t + 1]), len(present[t]))
        for subset, row in rows.items():
            for sign, _, face in taylor.boundary(subset):
                col = cols.get(face)
                if col is not None:
                    delta[row, col] = sign % field.p
        differentials.append(delta)
    return FiniteComplex(
        dims=tuple(len(level) for level in present),
        differentials=tuple(differentials),
        field=field,
    )


@lru_cache(maxsize=16384)
def _taylor_cohomology(ideal: MonomialIdeal, a: Multidegree, field: PrimeField) -> tuple[int, ...]:
    taylor = _cached_taylor(ideal)
    return tuple(cohomology_dims(dual_degree_complex(taylor, a, field)))


@lru_cache(maxsize=1024)
def _cached_taylor(ideal: MonomialIdeal) -> TaylorComplex:
    # cap is enforced by the public entry points
    return build_taylor_complex(ideal, max_generators=len(ideal.gens))


def ext_hilbert_via_taylor(ideal: MonomialIdeal, i: int, a: Sequence[int], field: PrimeField = DEFAULT_FIELD,
                           max_generators: int = DEFAULT_MAX_GENERATORS) -> int:
    """
    dim Ext^i(R/I, ω_R)_a from the dualized Taylor complex.

    Args:
        ideal: Proper monomial ideal
        i: Ext index, 0 ≤ i ≤ n
        a: Multidegree
        field: Coefficient field
        max_generators: Refuse ideals with more generators

    Raises:
        InputError: for i outside 0..n, a degree of the wrong length or too many generators
    """
    ideal.require_proper()
    if not 0 <= i <= ideal.n:
        raise InputError(f"Ext index {i} outside 0..{ideal.n}")
    if len(a) != ideal.n:
        raise InputError(f"degree {list(a)} has {len(a)} entries, ideal has {ideal.n} variables")
    if len(ideal.gens) > max_generators:
        raise InputError(f"Taylor complex capped at {max_generators} generators, ideal has {len(ideal.gens)}")
    dims = _taylor_cohomology(ideal, tuple(a), field)
    return dims[i] if i < len(dims) else 0


def oracle_mismatches(module, max_generators: int = DEFAULT_MAX_GENERATORS) -> list[tuple[Multidegree, int, int]]:
    """
    Compare a built Ext module with the Taylor oracle on its box and the
    shell just below it.

    Returns:
        (degree, module dimension, oracle dimension) for every disagreement
    """
    from regdim.homology.ext import evaluate_at_degree

    mismatches = []
    for a in module.box.extended(below=1).degrees():
        expected = ext_hilbert_via_taylor(module.ideal, module.index, a, module.field, max_generators)
        found = evaluate_at_degree(module, a)
        if found != expected:
            mismatches.append((a, found, expected))
    if mismatches:
        logger.error(f"Ext^{module.index} of {module.ideal}: {len(mismatches)} degrees disagree with the Taylor oracle")
    return mismatches


def clear_taylor_cache() -> None:
    _taylor_cohomology.cache_clear()
    _cached_taylor.cache_clear()
