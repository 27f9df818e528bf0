"""
Exact linear algebra over a prime field.

Matrices are numpy int64 arrays with entries reduced mod p. Elimination
uses deterministic first-nonzero pivoting, so kernel bases and cohomology
representatives are reproducible bit for bit.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, Field, field_validator

from regdim.exceptions import InvariantViolation

logger = logging.getLogger("regdim_linalg")

MAX_CHARACTERISTIC = 2**31


class PrimeField(BaseModel):
    """The field Z/pZ."""
    model_config = ConfigDict(frozen=True)

    p: int = Field(2, description="Prime modulus")

    @field_validator('p')
    @classmethod
    def validate_prime(cls, v):
        if v >= MAX_CHARACTERISTIC or not sympy.isprime(v):
            raise ValueError("characteristic must be prime")
        return v

    def inverse(self, x: int) -> int:
        return pow(int(x) % self.p, -1, self.p)


def as_matrix(entries, field: PrimeField, shape: Optional[tuple[int, int]] = None) -> np.ndarray:
    """
    Coerce nested sequences (or an array) into a reduced int64 matrix.

    Args:
        entries: Rows of integers; may be empty when shape is given
        field: Coefficient field
        shape: Required for empty inputs

    Returns:
        2-D numpy array
    """
    matrix = np.array(entries, dtype=np.int64)
    if shape is not None:
        matrix = matrix.reshape(shape)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {matrix.shape}")
    return matrix % field.p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(size: int) -> np.ndarray:
    return np.eye(size, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    """Matrix product mod p without int64 overflow."""
    inner = a.shape[1]
    p = field.p
    if inner == 0:
        return zeros(a.shape[0], b.shape[1])
    if (p - 1) ** 2 * inner < 2**62:
        return (a @ b) % p
    product = np.dot(a.astype(object), b.astype(object)) % p
    return product.astype(np.int64)


def row_echelon(matrix: np.ndarray, field: PrimeField,
                pivot_limit: Optional[int] = None) -> tuple[np.ndarray, list[int]]:
    """
    Reduced row echelon form.

    Args:
        matrix: m x n matrix
        field: Coefficient field
        pivot_limit: Only columns below this index may hold pivots (row
            operations still act on the full width, as for augmented systems)

    Returns:
        (R, pivot_cols) with len(pivot_cols) the rank of the restricted block
    """
    p = field.p
    reduced = np.array(matrix, dtype=np.int64) % p
    rows, cols = reduced.shape
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        candidates = np.nonzero(reduced[r:, c])[0]
        if candidates.size == 0:
            continue
        k = r + int(candidates[0])
        if k != r:
            reduced[[r, k]] = reduced[[k, r]]
        reduced[r] = (reduced[r] * field.inverse(reduced[r, c])) % p
        mask = reduced[:, c] != 0
        mask[r] = False
        if mask.any():
            reduced[mask] = (reduced[mask] - np.outer(reduced[mask, c], reduced[r])) % p
        pivots.append(c)
        r += 1
    return reduced, pivots


def rank(matrix: np.ndarray, field: PrimeField) -> int:
    if matrix.size == 0:
        return 0
    return len(row_echelon(matrix, field)[1])


def kernel_basis(matrix: np.ndarray, field: PrimeField) -> np.ndarray:
    """
    Echelonized basis of the null space.

    Returns:
        Array whose rows are the basis vectors; one per free column, with a
        1 in that column
    """
    cols = matrix.shape[1]
    reduced, pivots = row_echelon(matrix, field)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-reduced[r, f]) % field.p
    return basis


def solve(a: np.ndarray, y: np.ndarray, field: PrimeField) -> Optional[np.ndarray]:
    """
    Solve A X = Y.

    Returns:
        One solution (free variables set to 0), or None if inconsistent
    """
    k = a.shape[1]
    augmented = np.hstack([a % field.p, y % field.p])
    reduced, pivots = row_echelon(augmented, field, pivot_limit=k)
    if reduced[len(pivots):, k:].any():
        return None
    solution = zeros(k, y.shape[1])
    for r, c in enumerate(pivots):
        solution[c] = reduced[r, k:]
    return solution


def row_space_basis(rows: np.ndarray, field: PrimeField) -> np.ndarray:
    reduced, pivots = row_echelon(rows, field)
    return reduced[:len(pivots)]


def span_contains(rows: np.ndarray, vector: np.ndarray, field: PrimeField) -> bool:
    """True iff vector lies in the row span of rows."""
    if not (vector % field.p).any():
        return True
    if rows.shape[0] == 0:
        return False
    return rank(np.vstack([rows, vector]), field) == rank(rows, field)


def is_invertible(matrix: np.ndarray, field: PrimeField) -> bool:
    rows, cols = matrix.shape
    return rows == cols and rank(matrix, field) == rows


@dataclass
class CohomologyBasis:
    """
    Deterministic description of H^i of a finite complex.

    ``boundaries`` spans the image of the incoming differential and
    ``representatives`` are cocycles whose classes form a basis of H^i.
    Both are stored as rows.
    """
    index: int
    boundaries: np.ndarray
    representatives: np.ndarray
    field: PrimeField

    @property
    def dimension(self) -> int:
        return self.representatives.shape[0]

    def coordinates(self, cocycles: np.ndarray) -> np.ndarray:
        """
        Express cocycles (given as columns) in the representative basis.

        Raises:
            InvariantViolation: if a column is not a cocycle
        """
        if self.dimension == 0:
            return zeros(0, cocycles.shape[1])
        frame = np.vstack([self.boundaries, self.representatives]).T
        solution = solve(frame, cocycles, self.field)
        if solution is None:
            raise InvariantViolation(f"vector is not a cocycle in cohomological degree {self.index}")
        return solution[self.boundaries.shape[0]:]


@dataclass(eq=False)
class FiniteComplex:
    """
    A bounded cochain complex of finite-dimensional spaces.

    ``differentials[i]`` maps space i to space i+1 and has shape
    (dims[i+1], dims[i]). Construction asserts d∘d = 0.
    """
    dims: tuple[int, ...]
    differentials: tuple[np.ndarray, ...]
    field: PrimeField
    _bases: dict = dataclass_field(default_factory=dict, repr=False)

    def __post_init__(self):
        if len(self.differentials) != max(len(self.dims) - 1, 0):
            raise InvariantViolation(
                f"{len(self.dims)} spaces need {len(self.dims) - 1} differentials, got {len(self.differentials)}"
            )
        for i, d in enumerate(self.differentials):
            if d.shape != (self.dims[i + 1], self.dims[i]):
                raise InvariantViolation(
                    f"differential {i} has shape {d.shape}, expected {(self.dims[i + 1], self.dims[i])}"
                )
        for i in range(len(self.differentials) - 1):
            if matmul(self.differentials[i + 1], self.differentials[i], self.field).any():
                raise InvariantViolation(f"d{i + 1}∘d{i} != 0; sign convention is broken")

    @classmethod
    def from_differentials(cls, differentials: Sequence[np.ndarray], field: PrimeField) -> "FiniteComplex":
        if not differentials:
            raise ValueError("at least one differential is needed to infer dimensions")
        dims = [differentials[0].shape[1]] + [d.shape[0] for d in differentials]
        return cls(dims=tuple(dims), differentials=tuple(differentials), field=field)

    def __len__(self):
        return len(self.dims)

    def differential(self, i: int) -> Optional[np.ndarray]:
        if 0 <= i < len(self.differentials):
            return self.differentials[i]
        return None

    def cohomology_basis(self, i: int) -> CohomologyBasis:
        if i not in self._bases:
            self._bases[i] = _cohomology_basis(self, i)
        return self._bases[i]


def _cohomology_basis(complex_: FiniteComplex, i: int) -> CohomologyBasis:
    field = complex_.field
    size = complex_.dims[i]
    outgoing = complex_.differential(i)
    incoming = complex_.differential(i - 1)
    if incoming is None or incoming.size == 0:
        boundaries = zeros(0, size)
    else:
        boundaries = row_space_basis(incoming.T, field)
    if outgoing is None:
        cocycles = identity(size)
    else:
        cocycles = kernel_basis(outgoing, field)
    stacked = np.vstack([boundaries, cocycles])
    if stacked.shape[0] == 0:
        return CohomologyBasis(i, boundaries, zeros(0, size), field)
    # pivots of the transposed stack pick a complement of the boundaries among the cocycles
    _, pivots = row_echelon(stacked.T, field)
    offset = boundaries.shape[0]
    chosen = [c - offset for c in pivots if c >= offset]
    return CohomologyBasis(i, boundaries, cocycles[chosen], field)


def cohomology_dims(complex_: FiniteComplex) -> list[int]:
    """dim H^i = dim C^i − rank d^i − rank d^(i−1), for every i."""
    ranks = [rank(d, complex_.field) for d in complex_.differentials]
    result = []
    for i, size in enumerate(complex_.dims):
        out_rank = ranks[i] if i < len(ranks) else 0
        in_rank = ranks[i - 1] if i > 0 else 0
        result.append(size - out_rank - in_rank)
    return result


def induced_map_on_cohomology(source: FiniteComplex, target: FiniteComplex,
                              chain_map: Sequence[np.ndarray], i: int) -> np.ndarray:
    """
    Matrix of H^i(source) → H^i(target) induced by a chain map.

    Args:
        source: Complex C
        target: Complex D
        chain_map: One matrix per term, shape (dim D^t, dim C^t)
        i: Cohomological index

    Returns:
        (dim H^i(D)) x (dim H^i(C)) matrix in the deterministic bases

    Raises:
        InvariantViolation: if the chain map does not commute with the differentials
    """
    field = source.field
    check_chain_map(source, target, chain_map)
    reps = source.cohomology_basis(i).representatives
    images = matmul(chain_map[i], reps.T, field)
    return target.cohomology_basis(i).coordinates(images)


def check_chain_map(source: FiniteComplex, target: FiniteComplex, chain_map: Sequence[np.ndarray]) -> None:
    field = source.field
    if len(chain_map) != len(source.dims) or len(source.dims) != len(target.dims):
        raise InvariantViolation("chain map length does not match the complexes")
    for t, f in enumerate(chain_map):
        if f.shape != (target.dims[t], source.dims[t]):
            raise InvariantViolation(f"chain map component {t} has shape {f.shape}")
    for t in range(len(source.differentials)):
        left = matmul(chain_map[t + 1], source.differentials[t], field)
        right = matmul(target.differentials[t], chain_map[t], field)
        if not np.array_equal(left, right):
            raise InvariantViolation(f"chain map does not commute with the differential in degree {t}")
