"""Sparse exact linear algebra: rank, nullspace dimension, and inversion.

Matrices are dicts keyed by (row, col) with no stored zeros, generic over the
coefficient ring (rationals or Laurent polynomials).  Multiplication, addition
and equality work over any ring; rank/nullspace/invert require a field and are
used with rational entries only.

Elimination is plain fraction Gaussian elimination.  The pivot in each column
is the candidate entry with the smallest combined numerator/denominator bit
size (ties broken by row sparsity), which keeps coefficient growth in check on
the integer-heavy matrices that arise here.
"""

from __future__ import annotations

from .rings import LaurentPoly, Rational


class SingularMatrixError(ArithmeticError):
    """Raised when a matrix that must be invertible is singular."""


class SparseVector:
    """A sparse vector: dimension plus an {index: value} map with no zeros."""

    __slots__ = ("dimension", "entries")

    def __init__(self, dimension: int, entries=None):
        if dimension < 0:
            raise ValueError("dimension must be nonnegative")
        self.dimension = dimension
        data = {}
        if entries:
            for idx, value in entries.items():
                if not 0 <= idx < dimension:
                    raise ValueError("index %r out of range for dimension %d" % (idx, dimension))
                if value:
                    data[idx] = value
        self.entries = data

    def get(self, idx):
        return self.entries.get(idx, 0)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dimension == other.dimension and self.entries == other.entries

    def __add__(self, other: "SparseVector") -> "SparseVector":
        if self.dimension != other.dimension:
            raise ValueError("dimension mismatch")
        data = dict(self.entries)
        for idx, value in other.entries.items():
            total = data.get(idx, 0) + value
            if total:
                data[idx] = total
            elif idx in data:
                del data[idx]
        out = SparseVector(self.dimension)
        out.entries = data
        return out

    def __neg__(self) -> "SparseVector":
        out = SparseVector(self.dimension)
        out.entries = {idx: -value for idx, value in self.entries.items()}
        return out

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def scale(self, factor) -> "SparseVector":
        if not factor:
            return SparseVector(self.dimension)
        out = SparseVector(self.dimension)
        out.entries = {idx: factor * value for idx, value in self.entries.items()}
        return out

    def __repr__(self) -> str:
        items = ", ".join("%d: %s" % (i, self.entries[i]) for i in sorted(self.entries))
        return "SparseVector(%d, {%s})" % (self.dimension, items)


class SparseMatrix:
    """A sparse matrix: shape plus a {(row, col): value} map with no zeros."""

    __slots__ = ("rows", "cols", "entries", "_by_row", "_by_col")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        data = {}
        if entries:
            for (r, c), value in entries.items():
                if not (0 <= r < rows and 0 <= c < cols):
                    raise ValueError("entry (%r, %r) out of range for %dx%d" % (r, c, rows, cols))
                if value:
                    data[(r, c)] = value
        self.entries = data
        self._by_row = None
        self._by_col = None

    @classmethod
    def identity(cls, n: int, one=1) -> "SparseMatrix":
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    @classmethod
    def from_dense(cls, table) -> "SparseMatrix":
        rows = len(table)
        cols = len(table[0]) if rows else 0
        entries = {}
        for i, row in enumerate(table):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, value in enumerate(row):
                if value:
                    entries[(i, j)] = value
        return cls(rows, cols, entries)

    @classmethod
    def from_row_dicts(cls, row_dicts, cols: int) -> "SparseMatrix":
        entries = {}
        for i, row in enumerate(row_dicts):
            for j, value in row.items():
                if value:
                    entries[(i, j)] = value
        return cls(len(row_dicts), cols, entries)

    def get(self, r: int, c: int):
        return self.entries.get((r, c), 0)

    def by_rows(self) -> dict:
        if self._by_row is None:
            index = {}
            for (r, c), value in self.entries.items():
                index.setdefault(r, {})[c] = value
            self._by_row = index
        return self._by_row

    def by_cols(self) -> dict:
        if self._by_col is None:
            index = {}
            for (r, c), value in self.entries.items():
                index.setdefault(c, {})[r] = value
            self._by_col = index
        return self._by_col

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        data = dict(self.entries)
        for key, value in other.entries.items():
            total = data.get(key, 0) + value
            if total:
                data[key] = total
            elif key in data:
                del data[key]
        out = SparseMatrix(self.rows, self.cols)
        out.entries = data
        return out

    def __neg__(self) -> "SparseMatrix":
        out = SparseMatrix(self.rows, self.cols)
        out.entries = {key: -value for key, value in self.entries.items()}
        return out

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __mul__(self, scalar) -> "SparseMatrix":
        if isinstance(scalar, SparseMatrix):
            raise TypeError("use @ for matrix products")
        if not scalar:
            return SparseMatrix(self.rows, self.cols)
        out = SparseMatrix(self.rows, self.cols)
        out.entries = {key: value * scalar for key, value in self.entries.items()}
        return out

    __rmul__ = __mul__

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch: %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        other_rows = other.by_rows()
        data = {}
        for (i, m), a in self.entries.items():
            row = other_rows.get(m)
            if not row:
                continue
            for j, b in row.items():
                key = (i, j)
                total = data.get(key, 0) + a * b
                if total:
                    data[key] = total
                elif key in data:
                    del data[key]
        out = SparseMatrix(self.rows, other.cols)
        out.entries = data
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def map_values(self, fn) -> "SparseMatrix":
        """Apply fn to every stored value (dropping any that map to zero)."""
        out = SparseMatrix(self.rows, self.cols)
        data = {}
        for key, value in self.entries.items():
            new = fn(value)
            if new:
                data[key] = new
        out.entries = data
        return out

    def apply(self, vec: dict) -> dict:
        """Multiply by a column vector given as {index: value}; same form out."""
        cols = self.by_cols()
        result = {}
        for c, value in vec.items():
            column = cols.get(c)
            if not column:
                continue
            for r, a in column.items():
                total = result.get(r, 0) + a * value
                if total:
                    result[r] = total
                elif r in result:
                    del result[r]
        return result

    def flatten(self) -> dict:
        """Row-major flattening to {row * cols + col: value}."""
        cols = self.cols
        return {r * cols + c: v for (r, c), v in self.entries.items()}

    def to_dense(self) -> list:
        return [[self.entries.get((r, c), 0) for c in range(self.cols)]
                for r in range(self.rows)]

    def __repr__(self) -> str:
        return "SparseMatrix(%d, %d, %d entries)" % (self.rows, self.cols, len(self.entries))


def commutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b - b @ a


def anticommutator(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    return a @ b + b @ a


def _bit_size(value) -> int:
    return value.numerator.bit_length() + value.denominator.bit_length()


def _field_rows(matrix: SparseMatrix) -> list:
    """Copy rows into mutable dicts, coercing values into the rational field."""
    rows = [dict() for _ in range(matrix.rows)]
    for (r, c), value in matrix.entries.items():
        if isinstance(value, LaurentPoly):
            raise TypeError(
                "elimination needs field entries; evaluate Laurent matrices "
                "at a rational point first")
        rows[r][c] = value if isinstance(value, Rational) else Rational(value)
    return rows


def _lead(row: dict, ncols: int):
    lead = None
    for c in row:
        if c < ncols and (lead is None or c < lead):
            lead = c
    return lead


def _eliminate(rows: list, ncols: int):
    """Forward elimination on mutable row dicts (columns >= ncols ride along).

    Returns (rank, pivots) where pivots is a list of (col, row_dict) in
    ascending column order.  Rows are consumed.
    """
    buckets = {}
    for row in rows:
        lead = _lead(row, ncols)
        if lead is not None:
            buckets.setdefault(lead, []).append(row)
    pivots = []
    for col in range(ncols):
        bucket = buckets.pop(col, None)
        if not bucket:
            continue
        best = min(range(len(bucket)),
                   key=lambda i: (_bit_size(bucket[i][col]), len(bucket[i]), i))
        pivot = bucket.pop(best)
        pivots.append((col, pivot))
        pv = pivot[col]
        for row in bucket:
            factor = row[col] / pv
            del row[col]
            for c2, v in pivot.items():
                if c2 == col:
                    continue
                total = row.get(c2, 0) - factor * v
                if total:
                    row[c2] = total
                elif c2 in row:
                    del row[c2]
            lead = _lead(row, ncols)
            if lead is not None:
                buckets.setdefault(lead, []).append(row)
    return len(pivots), pivots


def rank(matrix: SparseMatrix) -> int:
    """Exact rank over the rationals."""
    r, _ = _eliminate(_field_rows(matrix), matrix.cols)
    return r


def nullspace_dimension(matrix: SparseMatrix) -> int:
    """cols - rank, the dimension of the right nullspace."""
    return matrix.cols - rank(matrix)


def invert(matrix: SparseMatrix) -> SparseMatrix:
    """Exact inverse of a square matrix; SingularMatrixError if rank-deficient."""
    if matrix.rows != matrix.cols:
        raise ValueError("only square matrices can be inverted")
    n = matrix.rows
    rows = _field_rows(matrix)
    for i, row in enumerate(rows):
        row[n + i] = Rational(1)
    nrank, pivots = _eliminate(rows, n)
    if nrank < n:
        raise SingularMatrixError("matrix is singular (rank %d < %d)" % (nrank, n))
    # back substitution: clear each pivot column from the earlier pivot rows
    for idx in range(n - 1, 0, -1):
        col, pivot = pivots[idx]
        pv = pivot[col]
        for jdx in range(idx):
            row = pivots[jdx][1]
            if col not in row:
                continue
            factor = row[col] / pv
            del row[col]
            for c2, v in pivot.items():
                if c2 == col:
                    continue
                total = row.get(c2, 0) - factor * v
                if total:
                    row[c2] = total
                elif c2 in row:
                    del row[c2]
    entries = {}
    for col, pivot in pivots:
        pv = pivot[col]
        for c2, v in pivot.items():
            if c2 >= n:
                entries[(col, c2 - n)] = v / pv
    return SparseMatrix(n, n, entries)
