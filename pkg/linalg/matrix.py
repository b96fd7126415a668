# matrix.py
"""Dense matrices over an exact Field, with Gauss-Jordan elimination."""
import logging
from typing import List, Sequence, Tuple

from core.errors import DomainError, ShapeError
from linalg.fields import Field

logger = logging.getLogger(__name__)


class Mat:
    def __init__(self, field: Field, data: List[list], ncols: int = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else (ncols or 0)
        for i, row in enumerate(self.data):
            if len(row) != self.ncols:
                raise ShapeError(f"row {i + 1} has {len(row)} entries, expected {self.ncols}")

    # -- construction --------------------------------------------------

    @staticmethod
    def zeros(field: Field, m: int, n: int) -> "Mat":
        return Mat(field, [[field.zero] * n for _ in range(m)], ncols=n)

    @staticmethod
    def identity(field: Field, n: int) -> "Mat":
        return Mat(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)], ncols=n)

    @staticmethod
    def from_ints(field: Field, rows: Sequence[Sequence[int]], ncols: int = None) -> "Mat":
        return Mat(field, [[field.from_int(x) for x in row] for row in rows], ncols=ncols)

    @staticmethod
    def from_columns(field: Field, columns: Sequence[Sequence], nrows: int = None) -> "Mat":
        if not columns:
            return Mat(field, [[] for _ in range(nrows or 0)], ncols=0)
        m = len(columns[0])
        return Mat(field, [[col[i] for col in columns] for i in range(m)], ncols=len(columns))

    @staticmethod
    def random(field: Field, m: int, n: int, rng) -> "Mat":
        return Mat(field, [[field.random(rng) for _ in range(n)] for _ in range(m)], ncols=n)

    @staticmethod
    def random_invertible(field: Field, n: int, rng) -> "Mat":
        """Uniform entries, resampled until the matrix is invertible."""
        while True:
            M = Mat.random(field, n, n, rng)
            if rank(M) == n:
                return M
            logger.debug("resampling a singular %dx%d matrix over %r", n, n, field.tag)

    @staticmethod
    def random_upper_triangular(field: Field, n: int, rng) -> "Mat":
        """Invertible upper-triangular matrix with random entries."""
        data = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                data[i][j] = field.random(rng)
            while field.is_zero(data[i][i]):
                data[i][i] = field.random(rng)
        return Mat(field, data, ncols=n)

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.data]

    def columns(self) -> List[list]:
        return [self.column(j) for j in range(self.ncols)]

    def select_columns(self, indices: Sequence[int]) -> "Mat":
        return Mat(self.field, [[row[j] for j in indices] for row in self.data], ncols=len(indices))

    def transpose(self) -> "Mat":
        return Mat(self.field, [self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def hstack(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ShapeError(f"cannot place {self.shape} next to {other.shape}")
        return Mat(self.field, [a + b for a, b in zip(self.data, other.data)], ncols=self.ncols + other.ncols)

    def copy(self) -> "Mat":
        return Mat(self.field, self.data, ncols=self.ncols)

    # -- arithmetic -----------------------------------------------------

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = other.columns()
        result = []
        for row in self.data:
            out = []
            for col in cols:
                acc = F.zero
                for a, b in zip(row, col):
                    if not F.is_zero(a) and not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
                out.append(acc)
            result.append(out)
        return Mat(F, result, ncols=other.ncols)

    def apply(self, vector: Sequence) -> list:
        F = self.field
        out = []
        for row in self.data:
            acc = F.zero
            for a, b in zip(row, vector):
                acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return out

    def scaled(self, c) -> "Mat":
        F = self.field
        return Mat(F, [[F.mul(c, x) for x in row] for row in self.data], ncols=self.ncols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Mat) and self.shape == other.shape and self.data == other.data

    def is_zero(self) -> bool:
        return all(self.field.is_zero(x) for row in self.data for x in row)

    def is_upper_triangular(self) -> bool:
        return all(self.field.is_zero(self.data[i][j]) for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def to_json(self) -> dict:
        return {"field": self.field.tag, "matrix": [[self.field.format(x) for x in row] for row in self.data]}

    def __repr__(self):
        return f"Mat({self.field.tag!r}, {[[self.field.format(x) for x in row] for row in self.data]})"


def row_reduce(M: Mat) -> Tuple[Mat, List[int]]:
    """Reduced row echelon form and the pivot columns, 0-based."""
    F = M.field
    rows = [list(row) for row in M.data]
    pivots = []
    piv_r = 0
    for piv_c in range(M.ncols):
        for i in range(piv_r, M.nrows):
            if not F.is_zero(rows[i][piv_c]):
                break
        else:
            continue
        rows[piv_r], rows[i] = rows[i], rows[piv_r]
        inv = F.inv(rows[piv_r][piv_c])
        rows[piv_r] = [F.mul(inv, x) for x in rows[piv_r]]
        pivot_row = rows[piv_r]
        for i in range(M.nrows):
            if i == piv_r:
                continue
            factor = rows[i][piv_c]
            if F.is_zero(factor):
                continue
            rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == M.nrows:
            break
    return Mat(F, rows, ncols=M.ncols), pivots


def rank(M: Mat) -> int:
    return len(row_reduce(M)[1])


def kernel_basis(M: Mat) -> List[list]:
    """Basis of {x : Mx = 0}; one vector per free column, cols - rank in total."""
    F = M.field
    R, pivots = row_reduce(M)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        x = [F.zero] * M.ncols
        x[free] = F.one
        for i, p in enumerate(pivots):
            x[p] = F.neg(R.data[i][free])
        basis.append(x)
    return basis


def solve(A: Mat, B: Mat) -> Mat:
    """X with AX = B. A must have full column rank on the relevant part; inconsistency is a DomainError."""
    if A.nrows != B.nrows:
        raise ShapeError(f"cannot solve {A.shape} X = {B.shape}")
    F = A.field
    R, pivots = row_reduce(A.hstack(B))
    n = A.ncols
    if any(p >= n for p in pivots):
        raise DomainError("linear system has no solution")
    X = [[F.zero] * B.ncols for _ in range(n)]
    for i, p in enumerate(pivots):
        X[p] = R.data[i][n:]
    return Mat(F, X, ncols=B.ncols)


def inverse(M: Mat) -> Mat:
    if M.nrows != M.ncols:
        raise ShapeError(f"cannot invert a {M.shape} matrix")
    n = M.nrows
    R, pivots = row_reduce(M.hstack(Mat.identity(M.field, n)))
    if pivots[:n] != list(range(n)):
        raise DomainError("matrix is singular")
    return Mat(M.field, [row[n:] for row in R.data], ncols=n)


def determinant(M: Mat):
    if M.nrows != M.ncols:
        raise ShapeError(f"determinant of a {M.shape} matrix")
    F = M.field
    rows = [list(row) for row in M.data]
    n = M.nrows
    det = F.one
    for c in range(n):
        for i in range(c, n):
            if not F.is_zero(rows[i][c]):
                break
        else:
            return F.zero
        if i != c:
            rows[c], rows[i] = rows[i], rows[c]
            det = F.neg(det)
        pivot = rows[c][c]
        det = F.mul(det, pivot)
        inv = F.inv(pivot)
        for i in range(c + 1, n):
            factor = rows[i][c]
            if F.is_zero(factor):
                continue
            factor = F.mul(factor, inv)
            rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return det


def column_space(M: Mat) -> Mat:
    """The pivot columns of M: a basis of its column space taken from its own columns."""
    _, pivots = row_reduce(M)
    return M.select_columns(pivots)
