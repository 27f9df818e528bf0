"""
Degree slices of the Čech complex of R/I.

In a fixed multidegree a every summand (R/I)_{x_Λ} of the Čech complex is
either zero or one-dimensional, spanned by the Laurent monomial x^a. A slice
is therefore a complex of coordinate spaces indexed by the surviving Λ, with
signed 0/±1 incidence matrices between them.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from regdim.algebra.linalg import (
    FiniteComplex,
    PrimeField,
    check_chain_map,
    cohomology_dims,
    zeros,
)
from regdim.algebra.monomials import (
    Face,
    MonomialIdeal,
    Multidegree,
    faces,
    localized_nonzero,
    negative_part,
    shift,
    support,
)
from regdim.exceptions import InputError, InvariantViolation

logger = logging.getLogger("regdim_cech")

DEFAULT_FIELD = PrimeField(p=2)


def cech_sign(face: Sequence[int], j: int) -> int:
    """Sign of the component Λ → Λ ∪ {j}: (−1)^{#{l ∈ Λ : l < j}}."""
    return -1 if sum(1 for l in face if l < j) % 2 else 1


@dataclass(eq=False)
class DegreeComplex:
    """
    The multidegree-a slice of the restricted Čech complex Č_F ⊗ R/I.

    ``summands[i]`` lists, in colex order, the faces Λ with |Λ| = i and
    F ⊆ Λ whose summand is nonzero in degree a.
    """
    ideal: MonomialIdeal
    degree: Multidegree
    face: Face
    summands: tuple[tuple[Face, ...], ...]
    complex: FiniteComplex

    def position(self, i: int) -> dict[Face, int]:
        return {lam: k for k, lam in enumerate(self.summands[i])}

    def cohomology_dims(self) -> list[int]:
        return cohomology_dims(self.complex)


def _check_arguments(ideal: MonomialIdeal, a: Sequence[int], face: Iterable[int]) -> Face:
    ideal.require_proper()
    if len(a) != ideal.n:
        raise InputError(f"degree {list(a)} has {len(a)} entries, ideal has {ideal.n} variables")
    face = tuple(sorted(set(face)))
    if any(j < 0 or j >= ideal.n for j in face):
        raise InputError(f"face {list(face)} is not a subset of the variables")
    return face


def build_degree_complex(ideal: MonomialIdeal, a: Sequence[int], face: Iterable[int] = (),
                         field: PrimeField = DEFAULT_FIELD) -> DegreeComplex:
    """
    Build the degree-a slice of Č_F ⊗ R/I.

    Args:
        ideal: Proper monomial ideal
        a: Multidegree
        face: Restriction face F (0-based); the empty face gives the full slice
        field: Coefficient field

    Returns:
        DegreeComplex

    Raises:
        UnitIdealError: for the unit ideal
    """
    face = _check_arguments(ideal, a, face)
    return _cached_slice(ideal, tuple(a), face, field)


@lru_cache(maxsize=65536)
def _cached_slice(ideal: MonomialIdeal, a: Multidegree, face: Face, field: PrimeField) -> DegreeComplex:
    n = ideal.n
    required = set(face)
    summands = []
    for i in range(n + 1):
        present = tuple(
            lam for lam in faces(n, i)
            if required.issubset(lam) and localized_nonzero(ideal, lam, a)
        )
        summands.append(present)

    differentials = []
    for i in range(n):
        targets = {lam: k for k, lam in enumerate(summands[i + 1])}
        d = zeros(len(summands[i + 1]), len(summands[i]))
        for col, lam in enumerate(summands[i]):
            for j in range(n):
                if j in lam:
                    continue
                row = targets.get(tuple(sorted(lam + (j,))))
                if row is not None:
                    d[row, col] = cech_sign(lam, j) % field.p
        differentials.append(d)

    complex_ = FiniteComplex(
        dims=tuple(len(s) for s in summands),
        differentials=tuple(differentials),
        field=field,
    )
    logger.debug(f"Čech slice at {a} restricted to {face}: dims {complex_.dims}")
    return DegreeComplex(ideal=ideal, degree=a, face=face, summands=tuple(summands), complex=complex_)


def natural_slice(ideal: MonomialIdeal, a: Sequence[int], field: PrimeField = DEFAULT_FIELD) -> DegreeComplex:
    """The slice at a restricted to F = supp(a⁻), the one local cohomology is read from."""
    return build_degree_complex(ideal, a, support(negative_part(a)), field)


def local_cohomology_dims(ideal: MonomialIdeal, a: Sequence[int], field: PrimeField = DEFAULT_FIELD) -> list[int]:
    """dim H^i_m(R/I)_a for i = 0..n."""
    return natural_slice(ideal, a, field).cohomology_dims()


def local_cohomology_dim(ideal: MonomialIdeal, i: int, a: Sequence[int],
                         field: PrimeField = DEFAULT_FIELD) -> int:
    """
    dim H^i_m(R/I)_a, computed on Č_F with F = supp(a⁻).

    Raises:
        InputError: if i is outside 0..n
    """
    if not 0 <= i <= ideal.n:
        raise InputError(f"cohomological index {i} outside 0..{ideal.n}")
    return local_cohomology_dims(ideal, a, field)[i]


def full_local_cohomology_dims(ideal: MonomialIdeal, a: Sequence[int],
                               field: PrimeField = DEFAULT_FIELD) -> list[int]:
    """Same dimensions computed on the unrestricted slice; used for cross-validation."""
    return build_degree_complex(ideal, a, (), field).cohomology_dims()


def multiplication_chain_map(source: DegreeComplex, target: DegreeComplex, j: int) -> list[np.ndarray]:
    """
    Chain map x_j between two slices whose degrees differ by e_j.

    x^a ↦ x^{a+e_j} on every Λ present in both slices; summands that vanish
    in the target receive nothing.

    Raises:
        InvariantViolation: if the map fails to commute with the differentials
    """
    expected = shift(source.degree, j)
    if target.degree != expected:
        raise InvariantViolation(f"target degree {target.degree} is not {expected}")
    components = []
    for i, lams in enumerate(source.summands):
        rows = target.position(i)
        f = zeros(len(target.summands[i]), len(lams))
        for col, lam in enumerate(lams):
            row = rows.get(lam)
            if row is not None:
                f[row, col] = 1
        components.append(f)
    check_chain_map(source.complex, target.complex, components)
    return components


def chain_multiplication_map(ideal: MonomialIdeal, a: Sequence[int], j: int, face: Iterable[int] = (),
                             field: PrimeField = DEFAULT_FIELD) -> list[np.ndarray]:
    """
    Multiplication by x_j from the slice of Č_F at a to the slice at a + e_j.

    Args:
        ideal: Proper monomial ideal
        a: Source degree
        j: Variable (0-based)
        face: Restriction face F, shared by both slices
        field: Coefficient field

    Returns:
        One 0/1 matrix per cohomological index
    """
    if not 0 <= j < ideal.n:
        raise InputError(f"variable index {j} outside 0..{ideal.n - 1}")
    source = build_degree_complex(ideal, a, face, field)
    target = build_degree_complex(ideal, shift(a, j), face, field)
    return multiplication_chain_map(source, target, j)


def clear_slice_cache() -> None:
    _cached_slice.cache_clear()
