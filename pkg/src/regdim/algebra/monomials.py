"""
Monomial ideals and multidegree arithmetic.

Multidegrees and exponent vectors are plain integer tuples; variables are
0-based internally and 1-based wherever a human reads them (ideal files,
JSON reports).
"""
import itertools
import logging
from typing import Iterable, Iterator, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from regdim.exceptions import InputError, UnitIdealError

logger = logging.getLogger("regdim_monomials")

Multidegree = tuple[int, ...]
ExponentVector = tuple[int, ...]
Face = tuple[int, ...]


def positive_part(a: Sequence[int]) -> Multidegree:
    return tuple(x if x > 0 else 0 for x in a)


def negative_part(a: Sequence[int]) -> Multidegree:
    return tuple(-x if x < 0 else 0 for x in a)


def split_degree(a: Sequence[int]) -> tuple[Multidegree, Multidegree]:
    """Return (a⁺, a⁻) with a = a⁺ − a⁻ and disjoint supports."""
    return positive_part(a), negative_part(a)


def support(a: Sequence[int]) -> Face:
    return tuple(j for j, x in enumerate(a) if x != 0)


def total_degree(a: Sequence[int]) -> int:
    return sum(a)


def unit_vector(n: int, j: int) -> Multidegree:
    return tuple(1 if k == j else 0 for k in range(n))


def face_vector(n: int, face: Iterable[int]) -> Multidegree:
    members = set(face)
    return tuple(1 if k in members else 0 for k in range(n))


def add_degrees(a: Sequence[int], b: Sequence[int]) -> Multidegree:
    return tuple(x + y for x, y in zip(a, b))


def sub_degrees(a: Sequence[int], b: Sequence[int]) -> Multidegree:
    return tuple(x - y for x, y in zip(a, b))


def shift(a: Sequence[int], j: int, by: int = 1) -> Multidegree:
    return tuple(x + by if k == j else x for k, x in enumerate(a))


def negate(a: Sequence[int]) -> Multidegree:
    return tuple(-x for x in a)


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff x^u divides x^v."""
    return all(x <= y for x, y in zip(u, v))


def face_mask(face: Iterable[int]) -> int:
    return sum(1 << j for j in face)


def faces(n: int, size: Optional[int] = None) -> list[Face]:
    """
    Subsets of {0, ..., n-1} in colex order (ascending bit mask).

    Args:
        n: Ground set size
        size: Restrict to subsets of this cardinality

    Returns:
        Sorted tuples
    """
    if size is None:
        found = [c for k in range(n + 1) for c in itertools.combinations(range(n), k)]
    else:
        found = list(itertools.combinations(range(n), size))
    return sorted(found, key=face_mask)


def one_based(face: Iterable[int]) -> list[int]:
    return [j + 1 for j in face]


class MonomialIdeal(BaseModel):
    """
    A monomial ideal given by its minimal generators.

    ``gens`` is an antichain under divisibility, sorted lexicographically.
    The empty tuple is the zero ideal; ``((0, ..., 0),)`` is the unit ideal.
    Use :func:`minimalize` to build one from arbitrary generators.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of variables")
    gens: tuple[ExponentVector, ...] = Field(default=(), description="Minimal generators")

    @model_validator(mode='after')
    def check_minimal(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError(f"generator {list(g)} has {len(g)} entries, expected {self.n}")
            if any(e < 0 for e in g):
                raise ValueError(f"generator {list(g)} has a negative exponent")
        if list(self.gens) != sorted(set(self.gens)):
            raise ValueError("generators must be distinct and sorted lexicographically")
        for g, h in itertools.permutations(self.gens, 2):
            if divides(g, h):
                raise ValueError(f"generator {list(h)} is divisible by {list(g)}")
        return self

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def variables_used(self) -> Face:
        return tuple(j for j in range(self.n) if any(g[j] for g in self.gens))

    def require_proper(self) -> None:
        if self.is_unit:
            raise UnitIdealError()

    def __str__(self):
        if self.is_zero:
            return f"(0) in {self.n} variables"
        return "(" + ", ".join(monomial_string(g) for g in self.gens) + ")"


def monomial_string(u: Sequence[int]) -> str:
    factors = []
    for j, e in enumerate(u):
        if e == 1:
            factors.append(f"x{j + 1}")
        elif e > 1:
            factors.append(f"x{j + 1}^{e}")
    return "*".join(factors) if factors else "1"


def minimalize(raw_gens: Iterable[Sequence[int]], n: Optional[int] = None) -> MonomialIdeal:
    """
    Reduce a generating set to the minimal one.

    Args:
        raw_gens: Exponent vectors, any order, duplicates allowed
        n: Variable count; required when raw_gens is empty

    Returns:
        MonomialIdeal with lexicographically ordered minimal generators

    Raises:
        InputError: mixed vector lengths, negative entries, or unknown n
    """
    vectors = [tuple(int(e) for e in g) for g in raw_gens]
    lengths = {len(v) for v in vectors}
    if n is not None:
        lengths.add(n)
    if not lengths:
        raise InputError("variable count is required for the zero ideal")
    if len(lengths) > 1:
        raise InputError(f"exponent vectors of mixed lengths {sorted(lengths)}")
    width = lengths.pop()
    if any(e < 0 for v in vectors for e in v):
        raise InputError("exponent vectors must be componentwise nonnegative")

    kept: list[ExponentVector] = []
    # a proper divisor is lexicographically smaller, so one pass suffices
    for v in sorted(set(vectors)):
        if not any(divides(h, v) for h in kept):
            kept.append(v)
    return MonomialIdeal(n=width, gens=tuple(kept))


def contains(ideal: MonomialIdeal, u: Sequence[int]) -> bool:
    """True iff x^u lies in the ideal."""
    return any(divides(g, u) for g in ideal.gens)


def localized_nonzero(ideal: MonomialIdeal, face: Iterable[int], a: Sequence[int]) -> bool:
    """
    Decide whether (R/I)_{x_Λ} is nonzero in degree a.

    The Laurent monomial x^a survives iff every negative entry of a sits in Λ
    and no generator divides x^a once the variables of Λ are inverted, i.e.
    every generator exceeds a in some coordinate outside Λ.

    Args:
        ideal: Monomial ideal I
        face: Inverted variables Λ (0-based)
        a: Multidegree

    Returns:
        bool
    """
    inverted = set(face)
    if any(x < 0 and j not in inverted for j, x in enumerate(a)):
        return False
    outside = [j for j in range(ideal.n) if j not in inverted]
    return all(any(g[j] > a[j] for j in outside) for g in ideal.gens)


def rho(ideal: MonomialIdeal) -> ExponentVector:
    """
    Componentwise maximum of the generator exponents.

    Raises:
        UnitIdealError: for the unit ideal
    """
    ideal.require_proper()
    return tuple(max((g[j] for g in ideal.gens), default=0) for j in range(ideal.n))


def box_degrees(lower: Sequence[int], upper: Sequence[int]) -> Iterator[Multidegree]:
    """All integer vectors between lower and upper, lexicographic order."""
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lower, upper)))
