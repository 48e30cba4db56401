"""Exact dense matrices over a parameter field.

Matrices act on coordinate columns: the image of basis vector e_i under M
is the i-th column, so composition reads left to right as M2 * M1.
"""

from .errors import ShapeMismatch, Singular
from .scalars import ParamSpace, Scalar


class Matrix:
    """Immutable matrix of Scalars, stored as a tuple of row tuples."""

    __slots__ = ("space", "rows", "nrows", "ncols", "_cols")

    def __init__(self, space: ParamSpace, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ShapeMismatch("matrix needs at least one row and column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ShapeMismatch("ragged matrix rows")
            for x in r:
                if not isinstance(x, Scalar):
                    raise ShapeMismatch("matrix entries must be Scalars")
        self.space = space
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = width
        self._cols = None

    @staticmethod
    def identity(space, n) -> "Matrix":
        one, zero = space.one, space.zero
        return Matrix(space, [[one if i == j else zero for j in range(n)]
                              for i in range(n)])

    @staticmethod
    def zeros(space, nrows, ncols=None) -> "Matrix":
        zero = space.zero
        ncols = nrows if ncols is None else ncols
        return Matrix(space, [[zero] * ncols for _ in range(nrows)])

    @staticmethod
    def from_function(space, nrows, ncols, fn) -> "Matrix":
        return Matrix(space, [[fn(i, j) for j in range(ncols)]
                              for i in range(nrows)])

    # -- sparse column view, cached; the evaluator works column-wise --

    def columns(self):
        """List of sparse columns: columns()[j] = [(i, entry), ...] nonzero only."""
        if self._cols is None:
            cols = [[] for _ in range(self.ncols)]
            for i, row in enumerate(self.rows):
                for j, x in enumerate(row):
                    if not x.is_zero():
                        cols[j].append((i, x))
            self._cols = cols
        return self._cols

    def apply(self, vec: dict) -> dict:
        """Image of a sparse coordinate vector {index: Scalar}."""
        cols = self.columns()
        out = {}
        for j, c in vec.items():
            if c.is_zero():
                continue
            for i, a in cols[j]:
                s = out.get(i)
                s = a * c if s is None else s + a * c
                if s.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = s
        return out

    def entry(self, i, j) -> Scalar:
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    # -- arithmetic --

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.space, [[x + y for x, y in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.space, [[x - y for x, y in zip(r, s)]
                                   for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.space, [[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Matrix(self.space, [[x * other for x in r] for r in self.rows])
        if self.ncols != other.nrows:
            raise ShapeMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        bt = other.transpose().rows
        return Matrix(self.space, [
            [_dot(r, c) for c in bt] for r in self.rows
        ])

    def scale(self, s: Scalar) -> "Matrix":
        return self * s

    def transpose(self) -> "Matrix":
        return Matrix(self.space, list(zip(*self.rows)))

    def power(self, n: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeMismatch("power of a non-square matrix")
        if n < 0:
            return self.invert().power(-n)
        out = Matrix.identity(self.space, self.nrows)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.nrows == self.nrows
            and other.rows == self.rows
        )

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def is_identity(self):
        if self.nrows != self.ncols:
            return False
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if i == j:
                    if not x.is_one():
                        return False
                elif not x.is_zero():
                    return False
        return True

    # -- elimination --

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ShapeMismatch("determinant of a non-square matrix")
        n = self.nrows
        m = [list(r) for r in self.rows]
        det = self.space.one
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                return self.space.zero
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            p = m[col][col]
            det = det * p
            pinv = p.inv()
            for r in range(col + 1, n):
                f = m[r][col] * pinv
                if f.is_zero():
                    continue
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return det

    def invert(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        zero, one = self.space.zero, self.space.one
        m = [list(r) + [one if i == j else zero for j in range(n)]
             for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not m[r][col].is_zero():
                    pivot = r
                    break
            if pivot is None:
                raise Singular("matrix is singular (determinant 0)")
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
            pinv = m[col][col].inv()
            m[col] = [x * pinv for x in m[col]]
            for r in range(n):
                if r == col:
                    continue
                f = m[r][col]
                if f.is_zero():
                    continue
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return Matrix(self.space, [row[n:] for row in m])

    def solve(self, rhs) -> tuple:
        """Solution x of self * x = rhs for a column given as a tuple of Scalars."""
        if len(rhs) != self.nrows:
            raise ShapeMismatch("right-hand side has the wrong length")
        inv = self.invert()
        return tuple(_dot(row, rhs) for row in inv.rows)

    def _same_shape(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ShapeMismatch(
                f"shape {self.nrows}x{self.ncols} does not match "
                f"{other.nrows}x{other.ncols}"
            )

    def to_lists(self):
        """Entries rendered to strings, row by row."""
        return [[x.render() for x in r] for r in self.rows]

    def __repr__(self):
        return f"<matrix {self.nrows}x{self.ncols}>"


def _dot(xs, ys):
    it = iter(zip(xs, ys))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def matrix_from_strings(space, rows) -> Matrix:
    """Matrix from nested lists of scalar expressions (strings or numbers)."""
    return Matrix(space, [[space.parse(str(x)) for x in r] for r in rows])
