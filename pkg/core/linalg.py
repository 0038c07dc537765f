"""Exact linear algebra over QQ.

Rank and nullspace come from one fraction-free (Bareiss) forward elimination
on an integer matrix obtained by clearing the denominators of each row.  The
pivot is the first nonzero entry of the column, so results are deterministic.
"""

from dataclasses import dataclass
from math import lcm
from typing import Hashable, List, Mapping, Sequence, Tuple

from logzero import logger
from sympy.polys.domains import QQ

from core.errors import DegreeMismatch, DependentBasis, NotInSpan
from core.exact_algebra import Rational, format_rational, parse_rational


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of exact rationals, stored row by row."""

    rows: int
    cols: int
    entries: Tuple[Tuple[Rational, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(row) != self.cols for row in self.entries):
            raise DegreeMismatch(f"Entries do not form a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RationalMatrix":
        entries = tuple(tuple(parse_rational(x) if not isinstance(x, Rational) else x for x in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RationalMatrix":
        if not columns:
            return cls(rows, 0, tuple(() for _ in range(rows)))
        return cls.from_rows([[column[i] for column in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple(tuple(QQ.zero for _ in range(cols)) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(tuple(QQ.one if i == j else QQ.zero for j in range(n)) for i in range(n)))

    def column(self, j: int) -> List[Rational]:
        return [row[j] for row in self.entries]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DegreeMismatch(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.column(j) for j in range(other.cols)]
        entries = tuple(
            tuple(sum((a * b for a, b in zip(row, column) if a and b), QQ.zero) for column in columns)
            for row in self.entries
        )
        return RationalMatrix(self.rows, other.cols, entries)

    def apply(self, vector: Sequence[Rational]) -> List[Rational]:
        if len(vector) != self.cols:
            raise DegreeMismatch(f"Vector of length {len(vector)} for a matrix with {self.cols} columns")
        return [sum((a * b for a, b in zip(row, vector) if a and b), QQ.zero) for row in self.entries]

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def to_json(self) -> List[List[str]]:
        return [[format_rational(x) for x in row] for row in self.entries]


def _integer_rows(M: RationalMatrix) -> List[List[int]]:
    rows = []
    for row in M.entries:
        scale = lcm(*(int(QQ.denom(x)) for x in row)) if row else 1
        rows.append([int(QQ.numer(x)) * (scale // int(QQ.denom(x))) for x in row])
    return rows


def bareiss_echelon(M: RationalMatrix) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form and pivot columns.

    Each division by the previous pivot is exact (Sylvester's identity), so
    all intermediate entries stay integers.
    """
    work = _integer_rows(M)
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(M.cols):
        if r == M.rows:
            break
        pivot_row = next((i for i in range(r, M.rows) if work[i][c]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][c]
        for i in range(r + 1, M.rows):
            factor = work[i][c]
            for j in range(c + 1, M.cols):
                work[i][j] = (pivot * work[i][j] - factor * work[r][j]) // previous
            work[i][c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rank(M: RationalMatrix) -> int:
    if not M.rows or not M.cols:
        return 0
    return len(bareiss_echelon(M)[1])


def nullspace(M: RationalMatrix) -> List[List[Rational]]:
    """Exact basis of the right kernel: one vector per free column, back-substituted."""
    if not M.rows:
        return [[QQ.one if i == j else QQ.zero for i in range(M.cols)] for j in range(M.cols)]
    echelon, pivots = bareiss_echelon(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        solution = [QQ.zero] * M.cols
        solution[f] = QQ.one
        for row, p in reversed(list(zip(echelon, pivots))):
            total = sum((QQ(row[c]) * solution[c] for c in range(p + 1, M.cols) if row[c] and solution[c]), QQ.zero)
            solution[p] = -total / QQ(row[p])
        basis.append(solution)
    return basis


def solve_coordinates(basis: Sequence[Sequence[Rational]], target: Sequence[Rational]) -> List[Rational]:
    """Coefficients c with sum c_i basis_i = target."""
    if not basis:
        if any(target):
            raise NotInSpan("Nonzero target with an empty basis")
        return []
    size = len(target)
    if any(len(vector) != size for vector in basis):
        raise DegreeMismatch("Basis vectors and target differ in length")
    B = RationalMatrix.from_columns(basis, size)
    if rank(B) < len(basis):
        raise DependentBasis(f"{len(basis)} basis vectors span a space of dimension {rank(B)}")
    augmented = RationalMatrix.from_columns(list(basis) + [list(target)], size)
    kernel = nullspace(augmented)
    if not kernel:
        raise NotInSpan("Target is not in the span of the basis")
    # The basis is independent, so the kernel is one-dimensional with nonzero last entry.
    vector = kernel[0]
    scale = -vector[-1]
    return [x / scale for x in vector[:-1]]


def coordinate_matrix(items: Sequence[Mapping[Hashable, Rational]]) -> Tuple[List[Hashable], RationalMatrix]:
    """Vectorize sparse coordinate maps over the sorted union of their keys (one column per item)."""
    keys = sorted({k for item in items for k in item}, key=repr)
    index = {k: i for i, k in enumerate(keys)}
    columns = []
    for item in items:
        column = [QQ.zero] * len(keys)
        for k, value in item.items():
            column[index[k]] = value
        columns.append(column)
    return keys, RationalMatrix.from_columns(columns, len(keys))


def express_in_basis(basis: Sequence[Mapping[Hashable, Rational]], target: Mapping[Hashable, Rational]) -> List[Rational]:
    """solve_coordinates after vectorizing the basis and the target together."""
    keys, matrix = coordinate_matrix(list(basis) + [target])
    columns = [matrix.column(j) for j in range(matrix.cols)]
    logger.debug(f"Expressing target over {len(basis)} basis elements in {len(keys)} coordinates")
    return solve_coordinates(columns[:-1], columns[-1])
