"""
Multigraded Betti numbers and Castelnuovo–Mumford regularity of a BoxModule.

β_{i,a}(M) = dim H_i(M ⊗ K(x_1, ..., x_n))_a, where the degree-a slice of
the Koszul complex has the summands M_{a-e_S} for |S| = i.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

import numpy as np

from regdim.algebra.linalg import FiniteComplex, cohomology_dims, rank, zeros
from regdim.algebra.monomials import Multidegree, box_degrees, face_vector, faces, shift, sub_degrees, total_degree
from regdim.homology.ext import BoxModule, evaluate_at_degree, module_map

logger = logging.getLogger("regdim_betti")


@dataclass
class BettiTable:
    """Sparse map (homological index, degree) -> β; only nonzero entries are stored."""
    n: int
    entries: dict = dataclass_field(default_factory=dict)

    def __getitem__(self, key: tuple[int, Multidegree]) -> int:
        i, a = key
        return self.entries.get((i, tuple(a)), 0)

    def __len__(self):
        return len(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def triples(self) -> list[tuple[int, Multidegree, int]]:
        return [(i, a, b) for (i, a), b in sorted(self.entries.items())]

    def row(self, i: int) -> dict[Multidegree, int]:
        return {a: b for (k, a), b in sorted(self.entries.items()) if k == i}


def koszul_complex_at(module: BoxModule, a: Sequence[int]) -> FiniteComplex:
    """
    Degree-a slice of M ⊗ K as a cochain complex with spaces K_n, ..., K_0.

    ∂(e_S ⊗ m) = Σ_t (−1)^t e_{S∖s_t} ⊗ x_{s_t} m with s_0 < s_1 < ... the
    elements of S; d∘d = 0 is asserted by FiniteComplex.
    """
    n = module.n
    field = module.field
    a = tuple(a)
    layout = []
    for t in range(n + 1):
        offsets = {}
        size = 0
        for s in faces(n, t):
            offsets[s] = size
            size += evaluate_at_degree(module, sub_degrees(a, face_vector(n, s)))
        layout.append((offsets, size))

    differentials = []
    for t in range(n, 0, -1):
        source_offsets, source_size = layout[t]
        target_offsets, target_size = layout[t - 1]
        d = zeros(target_size, source_size)
        for s, col in source_offsets.items():
            c = sub_degrees(a, face_vector(n, s))
            for position, var in enumerate(s):
                block = module_map(module, c, var)
                if block.size == 0:
                    continue
                row = target_offsets[s[:position] + s[position + 1:]]
                sign = -1 if position % 2 else 1
                d[row:row + block.shape[0], col:col + block.shape[1]] = (sign * block) % field.p
        differentials.append(d)

    return FiniteComplex(
        dims=tuple(layout[t][1] for t in range(n, -1, -1)),
        differentials=tuple(differentials),
        field=field,
    )


def koszul_euler_characteristic(module: BoxModule, a: Sequence[int]) -> int:
    """Σ_S (−1)^{|S|} dim M_{a−e_S}."""
    n = module.n
    return sum(
        (-1) ** len(s) * evaluate_at_degree(module, sub_degrees(a, face_vector(n, s)))
        for s in faces(n)
    )


def betti_degree_range(module: BoxModule) -> list[Multidegree]:
    """Candidate degrees: the box together with its shifts by {0,1}^n."""
    return list(box_degrees(module.box.lower, tuple(u + 1 for u in module.box.upper)))


def koszul_betti(module: BoxModule) -> BettiTable:
    """
    Every nonzero β_{i,a} of the module.

    Degrees where all Koszul summands vanish are skipped.
    """
    n = module.n
    table = BettiTable(n=n)
    for a in betti_degree_range(module):
        if not any(evaluate_at_degree(module, sub_degrees(a, face_vector(n, s))) for s in faces(n)):
            continue
        dims = cohomology_dims(koszul_complex_at(module, a))
        # space k of the slice is K_{n-k}
        for k, b in enumerate(dims):
            if b:
                table.entries[(n - k, a)] = b
    logger.debug(f"Betti table of Ext^{module.index} of {module.ideal}: {len(table)} nonzero entries")
    return table


def regularity(table: BettiTable) -> Optional[int]:
    """max{totdeg(a) − i : β_{i,a} ≠ 0}; None for the zero module."""
    return max((total_degree(a) - i for i, a, _ in table.triples()), default=None)


def regularity_witness(table: BettiTable) -> Optional[tuple[int, Multidegree]]:
    """First (i, a) in table order attaining the regularity."""
    reg = regularity(table)
    if reg is None:
        return None
    return next((i, a) for i, a, _ in table.triples() if total_degree(a) - i == reg)


def minimal_generator_counts(module: BoxModule) -> dict[Multidegree, int]:
    """
    β_0 computed as dim(M_a / Σ_j x_j M_{a−e_j}) on the box.

    Above the box every degree is reached by a bijective multiplication, so
    no minimal generator lives there.
    """
    counts = {}
    field = module.field
    for a, d in module.dims.items():
        if not d:
            continue
        blocks = [module_map(module, shift(a, j, by=-1), j) for j in range(module.n)]
        incoming = np.hstack(blocks) if blocks else zeros(d, 0)
        generators = d - rank(incoming, field)
        if generators:
            counts[a] = generators
    return dict(sorted(counts.items()))
