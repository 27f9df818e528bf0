"""
Ext^i(R/I, ω_R) as a finitely determined multigraded module.

Graded local duality identifies Ext^i(R/I, ω_R)_a with the dual of
H^{n-i}_m(R/I)_{-a}; multiplication by x_j on Ext is the transpose of
multiplication by x_j from degree -a-e_j to -a on local cohomology. The
module is (1, ..., 1)-determined, so it is stored on a finite box whose top
face is a = (1, ..., 1); everything above is recovered by clamping.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from regdim.algebra.linalg import (
    PrimeField,
    identity,
    induced_map_on_cohomology,
    is_invertible,
    matmul,
    zeros,
)
from regdim.algebra.monomials import (
    MonomialIdeal,
    Multidegree,
    box_degrees,
    negate,
    positive_part,
    rho,
    shift,
    support,
)
from regdim.exceptions import InputError, InvariantViolation
from regdim.homology.cech import DEFAULT_FIELD, multiplication_chain_map, natural_slice

logger = logging.getLogger("regdim_ext")

DEFAULT_GROWTH_LIMIT = 32


class DegreeBox(BaseModel):
    """Componentwise bounds lower ≤ a ≤ upper."""
    model_config = ConfigDict(frozen=True)

    lower: tuple[int, ...]
    upper: tuple[int, ...]

    @model_validator(mode='after')
    def check_bounds(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("lower and upper bounds have different lengths")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError(f"empty box {list(self.lower)}..{list(self.upper)}")
        return self

    @property
    def n(self) -> int:
        return len(self.lower)

    def degrees(self) -> list[Multidegree]:
        return list(box_degrees(self.lower, self.upper))

    def contains(self, a: Sequence[int]) -> bool:
        return all(lo <= x <= hi for lo, x, hi in zip(self.lower, a, self.upper))

    def shell(self, j: int) -> list[Multidegree]:
        """Degrees one step below the box in coordinate j and inside it elsewhere."""
        lower = tuple(lo - 1 if k == j else lo for k, lo in enumerate(self.lower))
        upper = tuple(lo - 1 if k == j else hi for k, (lo, hi) in enumerate(zip(self.lower, self.upper)))
        return list(box_degrees(lower, upper))

    def grown(self, coordinates: Sequence[int]) -> "DegreeBox":
        lower = tuple(lo - 1 if k in coordinates else lo for k, lo in enumerate(self.lower))
        return DegreeBox(lower=lower, upper=self.upper)

    def extended(self, below: int = 0, above: int = 0) -> "DegreeBox":
        return DegreeBox(
            lower=tuple(lo - below for lo in self.lower),
            upper=tuple(hi + above for hi in self.upper),
        )


def determined_box(ideal: MonomialIdeal) -> DegreeBox:
    """
    Initial box for Ext^i(R/I, ω_R): lower_j = 1 − max(ρ_j, 1), upper_j = 1.

    Raises:
        UnitIdealError: for the unit ideal
    """
    bounds = rho(ideal)
    return DegreeBox(
        lower=tuple(1 - max(r, 1) for r in bounds),
        upper=tuple(1 for _ in bounds),
    )


def ext_dimension(ideal: MonomialIdeal, i: int, a: Sequence[int], field: PrimeField = DEFAULT_FIELD) -> int:
    """dim Ext^i(R/I, ω_R)_a = dim H^{n-i}_m(R/I)_{-a}."""
    return natural_slice(ideal, negate(a), field).cohomology_dims()[ideal.n - i]


def ext_multiplication_map(ideal: MonomialIdeal, i: int, a: Sequence[int], j: int,
                           field: PrimeField = DEFAULT_FIELD) -> np.ndarray:
    """
    Matrix of x_j : Ext^i_a → Ext^i_{a+e_j} at any degree a.

    Both local cohomology slices (at -a-e_j and -a) are read on Č_F with
    F = supp(a⁺). Their natural restrictions contain F and have the same
    summands, so the cached natural slices are used directly.

    Returns:
        (dim Ext_{a+e_j}) x (dim Ext_a) matrix
    """
    a = tuple(a)
    h = ideal.n - i
    source = natural_slice(ideal, negate(shift(a, j)), field)
    target = natural_slice(ideal, negate(a), field)
    face = set(support(positive_part(a)))
    if not (face <= set(source.face) and face <= set(target.face)):
        raise InvariantViolation(f"restriction face {sorted(face)} not contained in the slice faces at {a}")
    source_dim = source.complex.cohomology_basis(h).dimension
    target_dim = target.complex.cohomology_basis(h).dimension
    if source_dim == 0 or target_dim == 0:
        return zeros(source_dim, target_dim)
    chain = multiplication_chain_map(source, target, j)
    dual = induced_map_on_cohomology(source.complex, target.complex, chain, h)
    return np.ascontiguousarray(dual.T)


@dataclass(eq=False)
class BoxModule:
    """
    Ext^i(R/I, ω_R) restricted to a validated degree box.

    ``dims[a]`` is the vector-space dimension in degree a and
    ``mult[(a, j)]`` the matrix of x_j from degree a to a + e_j, stored
    whenever both degrees lie in the box.
    """
    ideal: MonomialIdeal
    index: int
    box: DegreeBox
    dims: dict
    mult: dict
    field: PrimeField
    determinedness_checks: int = 0
    grown_coordinates: list = dataclass_field(default_factory=list)

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def is_zero(self) -> bool:
        return not any(self.dims.values())


def build_ext_module(ideal: MonomialIdeal, i: int, field: PrimeField = DEFAULT_FIELD,
                     growth_limit: int = DEFAULT_GROWTH_LIMIT) -> BoxModule:
    """
    Materialize Ext^i(R/I, ω_R) on its determined box.

    The box starts from :func:`determined_box`; its lower boundary shell is
    computed and the box grows downwards until the shell vanishes. Every
    multiplication map leaving the top face is checked to be bijective.

    Args:
        ideal: Proper monomial ideal
        i: Ext index, 0 ≤ i ≤ n
        field: Coefficient field
        growth_limit: Maximum rounds of shell growth

    Returns:
        BoxModule

    Raises:
        InputError: for i outside 0..n or the unit ideal
        InvariantViolation: if determinedness or commutativity fails
    """
    ideal.require_proper()
    n = ideal.n
    if not 0 <= i <= n:
        raise InputError(f"Ext index {i} outside 0..{n}")

    box = determined_box(ideal)
    grown: list[int] = []
    for _ in range(growth_limit):
        nonzero_shell = [
            j for j in range(n)
            if any(ext_dimension(ideal, i, a, field) for a in box.shell(j))
        ]
        if not nonzero_shell:
            break
        logger.warning(f"Ext^{i} of {ideal} is nonzero below the box in coordinates {nonzero_shell}; growing")
        grown.extend(nonzero_shell)
        box = box.grown(nonzero_shell)
    else:
        raise InvariantViolation(f"lower shell of Ext^{i} still nonzero after {growth_limit} rounds")

    dims = {a: ext_dimension(ideal, i, a, field) for a in box.degrees()}
    mult = {}
    checks = 0
    for a in box.degrees():
        for j in range(n):
            matrix = ext_multiplication_map(ideal, i, a, j, field)
            if a[j] < box.upper[j]:
                mult[(a, j)] = matrix
                continue
            # a_j = 1: j ∈ supp(a⁺), multiplication must be bijective
            if not is_invertible(matrix, field):
                raise InvariantViolation(
                    f"x{j + 1} : Ext^{i}_{list(a)} -> Ext^{i}_{list(shift(a, j))} is not bijective "
                    f"(shape {matrix.shape})"
                )
            checks += 1

    module = BoxModule(
        ideal=ideal,
        index=i,
        box=box,
        dims=dims,
        mult=mult,
        field=field,
        determinedness_checks=checks,
        grown_coordinates=sorted(set(grown)),
    )
    check_commutativity(module)
    logger.debug(f"Ext^{i} of {ideal}: total box dimension {sum(dims.values())}, {checks} bijectivity checks")
    return module


def check_commutativity(module: BoxModule) -> None:
    """
    Assert x_k x_j = x_j x_k on every square inside the box.

    Raises:
        InvariantViolation: on the first non-commuting square
    """
    box = module.box
    for a in box.degrees():
        for j in range(module.n):
            for k in range(j + 1, module.n):
                corner = shift(shift(a, j), k)
                if not box.contains(corner):
                    continue
                left = matmul(module.mult[(shift(a, j), k)], module.mult[(a, j)], module.field)
                right = matmul(module.mult[(shift(a, k), j)], module.mult[(a, k)], module.field)
                if not np.array_equal(left, right):
                    raise InvariantViolation(f"multiplication by x{j + 1}, x{k + 1} does not commute at {list(a)}")


def representative(module: BoxModule, b: Sequence[int]) -> Optional[Multidegree]:
    """Clamp b to the box top face; None when it falls below the validated support."""
    clamped = tuple(min(x, hi) for x, hi in zip(b, module.box.upper))
    if any(x < lo for x, lo in zip(clamped, module.box.lower)):
        return None
    return clamped


def evaluate_at_degree(module: BoxModule, b: Sequence[int]) -> int:
    """dim Ext^i_b for an arbitrary multidegree b."""
    rep = representative(module, b)
    return 0 if rep is None else module.dims[rep]


def iso_chain(module: BoxModule, b: Sequence[int]) -> list[tuple[Multidegree, int]]:
    """
    Steps (degree, variable) of bijective multiplications from the box
    representative of b up to b itself.
    """
    rep = representative(module, b)
    if rep is None:
        return []
    steps = []
    current = rep
    for j in range(module.n):
        while current[j] < b[j]:
            steps.append((current, j))
            current = shift(current, j)
    return steps


def module_map(module: BoxModule, c: Sequence[int], j: int) -> np.ndarray:
    """
    Matrix of x_j : M_c → M_{c+e_j} at any degree c.

    Outer degrees carry the basis transported from their box representative
    along the iso chain, so multiplication is the identity when c_j ≥ 1 and
    the stored box map otherwise.
    """
    c = tuple(c)
    src = representative(module, c)
    tgt = representative(module, shift(c, j))
    src_dim = 0 if src is None else module.dims[src]
    tgt_dim = 0 if tgt is None else module.dims[tgt]
    if src_dim == 0 or tgt_dim == 0:
        return zeros(tgt_dim, src_dim)
    if c[j] >= module.box.upper[j]:
        return identity(src_dim)
    return module.mult[(src, j)]


def is_finite_length(module: BoxModule) -> bool:
    """True iff the module vanishes in every degree a with a⁺ ≠ 0."""
    return not any(d for a, d in module.dims.items() if any(x > 0 for x in a))


def hilbert_function(module: BoxModule) -> list[tuple[Multidegree, int]]:
    """Nonzero (degree, dimension) pairs over the box, lexicographic order."""
    return [(a, d) for a, d in sorted(module.dims.items()) if d]
