"""
Stanley decompositions and filtrations of Ext modules.

Every box degree b of a (1, ..., 1)-determined module has b⁺ squarefree, so
a basis of M_b spans Stanley spaces k[G]·m with G = supp(b⁺). Ordered by
non-increasing total degree these pairs form a Stanley filtration; the
verifier below checks that claim degree by degree with explicit spans.
"""
import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from regdim.algebra.linalg import matmul, row_space_basis, span_contains, zeros
from regdim.algebra.monomials import Face, Multidegree, positive_part, shift, support, total_degree
from regdim.homology.ext import BoxModule, evaluate_at_degree, module_map

logger = logging.getLogger("regdim_stanley")


@dataclass(frozen=True)
class StanleyPair:
    """A Stanley space k[face]·m with m the index-th basis vector of M_degree."""
    face: Face
    degree: Multidegree
    index: int

    @property
    def label(self) -> tuple[Face, Multidegree, int]:
        return self.face, self.degree, self.index

    def covers(self, b: Sequence[int]) -> bool:
        """True iff b ∈ degree + ℕ^face."""
        return all(
            x >= d if j in self.face else x == d
            for j, (x, d) in enumerate(zip(b, self.degree))
        )


@dataclass(eq=False)
class StanleyDecomposition:
    module: BoxModule
    pairs: list[StanleyPair]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self) -> Iterator[StanleyPair]:
        return iter(self.pairs)


class FiltrationReport(BaseModel):
    """Outcome of :func:`verify_filtration`; positions and variables are 1-based."""
    passed: bool = Field(..., description="Both filtration conditions hold")
    condition: Optional[str] = Field(None, description="Violated condition, 'A' or 'B'")
    position: Optional[int] = Field(None, description="Position of the offending generator")
    variable: Optional[int] = Field(None, description="Variable whose multiplication failed")
    degree: Optional[list[int]] = Field(None, description="Degree where the check failed")
    message: str = ""


def stanley_sort_key(pair: StanleyPair):
    return -total_degree(pair.degree), pair.face, pair.degree, pair.index


def build_stanley_decomposition(module: BoxModule) -> StanleyDecomposition:
    """
    One pair per basis vector of every box degree, face = supp(b⁺).

    Pairs are ordered by non-increasing total degree, ties broken by
    (face, degree, basis index).
    """
    pairs = []
    for b in module.box.degrees():
        face = support(positive_part(b))
        pairs.extend(StanleyPair(face=face, degree=b, index=k) for k in range(module.dims[b]))
    pairs.sort(key=stanley_sort_key)
    logger.debug(f"Stanley decomposition of Ext^{module.index} of {module.ideal}: {len(pairs)} pairs")
    return StanleyDecomposition(module=module, pairs=pairs)


def stanley_count(decomposition: StanleyDecomposition, b: Sequence[int]) -> int:
    """Number of Stanley spaces containing degree b."""
    return sum(1 for pair in decomposition if pair.covers(b))


def counting_mismatches(decomposition: StanleyDecomposition, above: int = 2) -> list[tuple[Multidegree, int, int]]:
    """
    Compare stanley_count with the module dimension on the box extended by one
    step below and ``above`` steps above.

    Returns:
        (degree, stanley count, module dimension) for every disagreement
    """
    module = decomposition.module
    mismatches = []
    for b in module.box.extended(below=1, above=above).degrees():
        counted = stanley_count(decomposition, b)
        expected = evaluate_at_degree(module, b)
        if counted != expected:
            mismatches.append((b, counted, expected))
    return mismatches


def _orbit_degrees(module: BoxModule, start: Multidegree) -> list[Multidegree]:
    box = module.box
    return [c for c in box.degrees() if all(x >= s for x, s in zip(c, start))]


def verify_filtration(decomposition: StanleyDecomposition, module: Optional[BoxModule] = None) -> FiltrationReport:
    """
    Check that the ordered pairs m_1, ..., m_p form a Stanley filtration.

    The submodule M^(j) generated by m_1..m_j is tracked on every box degree.
    For each j:

    (A) x_l·m_j ∈ M^(j-1) for every l outside the face, and m_j ∉ M^(j-1);
        by determinedness this pins M^(j-1) :_R m_j to the ideal of the
        variables outside the face.
    (B) in every box degree c, M^(j)_c has dimension #{i ≤ j : deg m_i = c},
        so the k[G_i]-multiples form a basis; at the end M^(p) = M.

    Args:
        decomposition: Ordered pairs
        module: The module they decompose; defaults to the decomposition's own

    Returns:
        FiltrationReport with the first violation, if any
    """
    module = module or decomposition.module
    field = module.field
    spans = {c: zeros(0, module.dims[c]) for c in module.box.degrees()}
    counts = {c: 0 for c in module.box.degrees()}

    for position, pair in enumerate(decomposition, start=1):
        deg = pair.degree
        if not module.box.contains(deg) or pair.index >= module.dims[deg]:
            return FiltrationReport(
                passed=False, condition="B", position=position, degree=list(deg),
                message=f"generator {position} does not name a basis vector of the module",
            )
        vector = zeros(module.dims[deg], 1)
        vector[pair.index, 0] = 1

        for l in range(module.n):
            if l in pair.face:
                continue
            image = matmul(module_map(module, deg, l), vector, field)[:, 0]
            target = shift(deg, l)
            if not image.any():
                continue
            if not module.box.contains(target) or not span_contains(spans[target], image, field):
                return FiltrationReport(
                    passed=False, condition="A", position=position, variable=l + 1, degree=list(target),
                    message=f"x{l + 1} times generator {position} is not in the earlier submodule",
                )
        if span_contains(spans[deg], vector[:, 0], field):
            return FiltrationReport(
                passed=False, condition="A", position=position, degree=list(deg),
                message=f"generator {position} already lies in the earlier submodule",
            )

        counts[deg] += 1
        orbit: dict = {deg: vector}
        for c in _orbit_degrees(module, deg):
            if c != deg:
                k = next(k for k, (x, s) in enumerate(zip(c, deg)) if x > s)
                before = shift(c, k, by=-1)
                orbit[c] = matmul(module_map(module, before, k), orbit[before], field)
            if not orbit[c].any():
                continue
            spans[c] = row_space_basis(np.vstack([spans[c], orbit[c].T]), field)
            if spans[c].shape[0] != counts[c]:
                return FiltrationReport(
                    passed=False, condition="B", position=position, degree=list(c),
                    message=f"submodule has dimension {spans[c].shape[0]} in degree {list(c)}, "
                            f"expected {counts[c]}",
                )

    for c, rows in spans.items():
        if rows.shape[0] != module.dims[c]:
            return FiltrationReport(
                passed=False, condition="B", degree=list(c),
                message=f"filtration does not exhaust the module in degree {list(c)}",
            )
    return FiltrationReport(passed=True)


def filtration_reg_bound(decomposition: StanleyDecomposition) -> Optional[int]:
    """max totdeg(deg m) over the pairs; None for the zero module."""
    return max((total_degree(pair.degree) for pair in decomposition), default=None)


def krull_dimension(decomposition: StanleyDecomposition) -> Optional[int]:
    """max |face| over the pairs; None for the zero module."""
    return max((len(pair.face) for pair in decomposition), default=None)


def face_summary(decomposition: StanleyDecomposition) -> list[tuple[Face, Multidegree, int]]:
    """(face, degree, multiplicity) groups in decomposition order."""
    grouped: dict = {}
    for pair in decomposition:
        key = (pair.face, pair.degree)
        grouped[key] = grouped.get(key, 0) + 1
    return [(face, degree, count) for (face, degree), count in grouped.items()]
