"""
Common functions for all modules.

Exact rational matrices and the fraction-free elimination every Hom, Ext
and cocycle computation is reduced to.
"""

from fractions import Fraction
from math import lcm
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from quiverdeg.errors import InconsistencyError

__all__: List[str] = ["Matrix", "Rational", "format_rational", "parse_rational"]

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """
    Format a rational number as a :code:`"p/q"` string.

    :param value: An integer or a fraction.
    :return: The exact string form, denominator always present.
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(value: Any) -> Fraction:
    """
    Parse a rational number from its string or integer form.

    :param value: A string like :code:`"-3/4"` or :code:`"2"`, or an integer.
    :return: The parsed fraction.
    """
    if isinstance(value, bool):
        raise TypeError(f"Cannot accept '{value.__class__.__name__}' type.")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"'{value}' is not a rational number.") from None
    raise TypeError(f"Cannot accept '{value.__class__.__name__}' type.")


def _matrix_transpose(matrix: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """
    Transpose a matrix.

    :param matrix: A matrix in the form of a list of lists.
    :return: A transposed matrix.
    """
    return [list(row) for row in zip(*matrix)]


def _integral_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """
    Scale every row by the lcm of its denominators.

    Row scaling does not change the row space, so pivots, rank and kernel
    are those of the original rows.

    :param rows: Rows of fractions.
    :return: Rows of integers.
    """
    result = []
    for row in rows:
        scale = 1
        for entry in row:
            scale = lcm(scale, entry.denominator)
        result.append([int(entry * scale) for entry in row])
    return result


def _echelon(
    rows: Sequence[Sequence[Fraction]], ncols: int
) -> Tuple[List[List[int]], List[int]]:
    """
    Fraction-free (Bareiss) row echelon form.

    After step :math:`k` every remaining entry is a :math:`(k+1)`-minor of
    the input, so each division by the previous pivot is exact.

    :param rows: Rows of fractions.
    :param ncols: Number of columns.
    :return: Echelon rows of integers (nonzero rows only) and the pivot columns.
    """
    a = _integral_rows(rows)
    nrows = len(a)
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][c]
        for i in range(r + 1, nrows):
            factor = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c + 1, ncols):
                quotient, remainder = divmod(
                    pivot * row_i[j] - factor * row_r[j], previous
                )
                if remainder:
                    raise InconsistencyError(
                        "Fraction-free elimination lost exactness."
                    )
                row_i[j] = quotient
            row_i[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _back_substitute(
    echelon: List[List[int]], pivots: List[int], ncols: int, free: List[Fraction]
) -> List[Fraction]:
    """
    Solve an echelon system given values of the free variables.

    :param echelon: Echelon rows, the last column may be a right hand side.
    :param pivots: Pivot columns of the rows.
    :param ncols: Number of unknowns.
    :param free: Full-length vector with free variables set, pivots ignored.
    :return: The solution vector.
    """
    x = list(free)
    for r in range(len(pivots) - 1, -1, -1):
        p = pivots[r]
        row = echelon[r]
        total = Fraction(row[ncols]) if len(row) > ncols else Fraction(0)
        for j in range(p + 1, ncols):
            if row[j]:
                total -= row[j] * x[j]
        x[p] = total / row[p]
    return x


class Matrix:
    """
    An immutable matrix with exact rational entries.

    Shapes are explicit so that :math:`0 \\times n` and :math:`n \\times 0`
    matrices keep their dimensions.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Any]] = (), ncols: Optional[int] = None):
        """
        :param rows: The rows of the matrix. Entries may be integers,
                     fractions or :code:`"p/q"` strings.

        :param ncols: Number of columns; required when there are no rows.
        """
        converted = tuple(tuple(parse_rational(entry) for entry in row) for row in rows)
        if converted:
            width = len(converted[0])
            for row in converted:
                if len(row) != width:
                    raise ValueError("Not all rows are of equal length.")
            if ncols is not None and ncols != width:
                raise ValueError(f"Argument 'ncols' must be {width}, not {ncols}.")
            ncols = width
        elif ncols is None:
            ncols = 0
        if ncols < 0:
            raise ValueError(f"Argument 'ncols' must be nonnegative, not {ncols}.")
        self.rows: Tuple[Tuple[Fraction, ...], ...] = converted
        self.nrows: int = len(converted)
        self.ncols: int = ncols

    @classmethod
    def _raw(cls, rows: Tuple[Tuple[Fraction, ...], ...], ncols: int) -> "Matrix":
        matrix = cls.__new__(cls)
        matrix.rows = rows
        matrix.nrows = len(rows)
        matrix.ncols = ncols
        return matrix

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        """
        The zero matrix of a given shape.

        :param nrows: Number of rows.
        :param ncols: Number of columns.
        :return: A :class:`Matrix` of zeros.
        """
        zero = Fraction(0)
        return cls._raw(tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        """
        The identity matrix.

        :param size: Number of rows and columns.
        :return: A :class:`Matrix`.
        """
        return cls._raw(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(size))
                for i in range(size)
            ),
            size,
        )

    @classmethod
    def from_vector(
        cls, vector: Sequence[Rational], nrows: int, ncols: int
    ) -> "Matrix":
        """
        Build a matrix from its row-major coordinates.

        :param vector: A sequence of :code:`nrows * ncols` numbers.
        :param nrows: Number of rows.
        :param ncols: Number of columns.
        :return: A :class:`Matrix`.
        """
        if len(vector) != nrows * ncols:
            raise ValueError(
                f"Argument 'vector' must have {nrows * ncols} elements, "
                f"not {len(vector)}."
            )
        return cls._raw(
            tuple(
                tuple(Fraction(vector[i * ncols + j]) for j in range(ncols))
                for i in range(nrows)
            ),
            ncols,
        )

    @classmethod
    def block_diagonal(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        """
        Block diagonal matrix.

        :param blocks: Matrices placed along the diagonal.
        :return: A :class:`Matrix`.
        """
        ncols = sum(block.ncols for block in blocks)
        rows = []
        offset = 0
        zero = Fraction(0)
        for block in blocks:
            for row in block.rows:
                rows.append(
                    (zero,) * offset + row + (zero,) * (ncols - offset - block.ncols)
                )
            offset += block.ncols
        return cls._raw(tuple(rows), ncols)

    @classmethod
    def hstack(
        cls, blocks: Sequence["Matrix"], nrows: Optional[int] = None
    ) -> "Matrix":
        """
        Place matrices side by side.

        :param blocks: Matrices with the same number of rows.
        :param nrows: Number of rows; required when there are no blocks.
        :return: A :class:`Matrix`.
        """
        if not blocks:
            return cls.zeros(nrows or 0, 0)
        height = blocks[0].nrows
        for block in blocks:
            if block.nrows != height:
                raise ValueError("Blocks must have the same number of rows.")
        rows = tuple(
            tuple(entry for block in blocks for entry in block.rows[i])
            for i in range(height)
        )
        return cls._raw(rows, sum(block.ncols for block in blocks))

    @classmethod
    def vstack(
        cls, blocks: Sequence["Matrix"], ncols: Optional[int] = None
    ) -> "Matrix":
        """
        Place matrices on top of each other.

        :param blocks: Matrices with the same number of columns.
        :param ncols: Number of columns; required when there are no blocks.
        :return: A :class:`Matrix`.
        """
        if not blocks:
            return cls.zeros(0, ncols or 0)
        width = blocks[0].ncols
        for block in blocks:
            if block.ncols != width:
                raise ValueError("Blocks must have the same number of columns.")
        return cls._raw(tuple(row for block in blocks for row in block.rows), width)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        if not self.nrows or not self.ncols:
            return f"[] ({self.nrows}x{self.ncols})"
        return "\n".join(
            "[" + " ".join(str(entry) for entry in row) + "]" for row in self.rows
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return self.shape == other.shape and self.rows == other.rows
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.rows))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(
                tuple(a + b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.rows, other.rows)
            ),
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(
            tuple(
                tuple(a - b for a, b in zip(row_a, row_b))
                for row_a, row_b in zip(self.rows, other.rows)
            ),
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"Cannot multiply a {self.nrows}x{self.ncols} matrix "
                f"by a {other.nrows}x{other.ncols} matrix."
            )
        columns = _matrix_transpose(other.rows)
        zero = Fraction(0)
        if not columns:
            return Matrix.zeros(self.nrows, other.ncols)
        return Matrix._raw(
            tuple(
                tuple(
                    sum((a * b for a, b in zip(row, column) if a and b), zero)
                    for column in columns
                )
                for row in self.rows
            ),
            other.ncols,
        )

    def _check_same_shape(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"Cannot accept '{other.__class__.__name__}' type.")
        if self.shape != other.shape:
            raise ValueError(f"Shapes {self.shape} and {other.shape} do not match.")

    def scale(self, factor: Rational) -> "Matrix":
        """
        Multiply every entry by a scalar.

        :param factor: An integer or a fraction.
        :return: A :class:`Matrix`.
        """
        factor = Fraction(factor)
        return Matrix._raw(
            tuple(tuple(factor * entry for entry in row) for row in self.rows),
            self.ncols,
        )

    def transpose(self) -> "Matrix":
        """
        Transpose of the matrix.

        :return: A :class:`Matrix`.
        """
        if not self.nrows:
            return Matrix.zeros(self.ncols, 0)
        return Matrix._raw(
            tuple(tuple(row) for row in _matrix_transpose(self.rows)), self.nrows
        )

    def submatrix(
        self, row_start: int, row_stop: int, col_start: int, col_stop: int
    ) -> "Matrix":
        """
        A contiguous block of the matrix.

        :return: A :class:`Matrix` of shape
                 :code:`(row_stop - row_start, col_stop - col_start)`.
        """
        return Matrix._raw(
            tuple(row[col_start:col_stop] for row in self.rows[row_start:row_stop]),
            col_stop - col_start,
        )

    def vector(self) -> List[Fraction]:
        """
        Row-major coordinates of the matrix.

        :return: A list of :code:`nrows * ncols` fractions.
        """
        return [entry for row in self.rows for entry in row]

    def is_zero(self) -> bool:
        return all(entry == 0 for row in self.rows for entry in row)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and self == Matrix.identity(self.nrows)

    def rank(self) -> int:
        """
        Rank by fraction-free elimination.

        :return: The rank of the matrix.
        """
        return len(_echelon(self.rows, self.ncols)[1])

    def nullspace(self) -> List[List[Fraction]]:
        """
        A basis of the right kernel.

        Each basis vector has exactly one free variable set to :code:`1`,
        the free variables taken in increasing column order.

        :return: A list of column vectors given as lists.
        """
        echelon, pivots = _echelon(self.rows, self.ncols)
        pivot_set = set(pivots)
        basis = []
        for free_column in range(self.ncols):
            if free_column in pivot_set:
                continue
            start = [Fraction(0)] * self.ncols
            start[free_column] = Fraction(1)
            basis.append(_back_substitute(echelon, pivots, self.ncols, start))
        return basis

    def left_nullspace(self) -> List[List[Fraction]]:
        """
        A basis of the row vectors annihilating every column.

        :return: A list of row vectors given as lists.
        """
        return self.transpose().nullspace()

    def pivot_columns(self) -> List[int]:
        """
        Indices of columns forming a basis of the column space.

        :return: Increasing list of column indices.
        """
        return _echelon(self.rows, self.ncols)[1]

    def solve(self, rhs: Sequence[Rational]) -> Optional[List[Fraction]]:
        """
        One solution of :math:`Ax = b`, free variables set to zero.

        :param rhs: The right hand side :math:`b`.
        :return: A solution or :code:`None` when the system is inconsistent.
        """
        if len(rhs) != self.nrows:
            raise ValueError(
                f"Argument 'rhs' must have {self.nrows} elements, not {len(rhs)}."
            )
        augmented = [row + (Fraction(b),) for row, b in zip(self.rows, rhs)]
        echelon, pivots = _echelon(augmented, self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        return _back_substitute(echelon, pivots, self.ncols, [Fraction(0)] * self.ncols)

    def right_inverse(self) -> "Matrix":
        """
        A matrix :math:`X` with :math:`AX = 1` for a full row rank :math:`A`.

        :return: A :class:`Matrix` of shape :code:`(ncols, nrows)`.
        """
        columns = []
        for i in range(self.nrows):
            unit = [Fraction(1 if j == i else 0) for j in range(self.nrows)]
            solution = self.solve(unit)
            if solution is None:
                raise ValueError("Matrix does not have full row rank.")
            columns.append(solution)
        if not columns:
            return Matrix.zeros(self.ncols, 0)
        return Matrix(_matrix_transpose(columns))

    def left_inverse(self) -> "Matrix":
        """
        A matrix :math:`X` with :math:`XA = 1` for a full column rank :math:`A`.

        :return: A :class:`Matrix` of shape :code:`(ncols, nrows)`.
        """
        return self.transpose().right_inverse().transpose()

    def inverse(self) -> "Matrix":
        """
        Inverse of a square invertible matrix.

        :return: A :class:`Matrix`.
        """
        if self.nrows != self.ncols:
            raise ValueError(f"Matrix of shape {self.shape} is not square.")
        return self.right_inverse()

    def to_strings(self) -> List[List[str]]:
        """
        Entries as :code:`"p/q"` strings.

        :return: Rows of strings.
        """
        return [[format_rational(entry) for entry in row] for row in self.rows]


def span_contains(
    vectors: Sequence[Sequence[Rational]], target: Sequence[Rational]
) -> bool:
    """
    Membership of a vector in the span of others.

    :param vectors: Spanning vectors of equal length.
    :param target: The vector to test.
    :return: :code:`True` iff :code:`target` is a linear combination.
    """
    if all(entry == 0 for entry in target):
        return True
    if not vectors:
        return False
    system = Matrix(_matrix_transpose(vectors), ncols=len(vectors))
    return system.solve(list(target)) is not None


def span_rank(vectors: Sequence[Sequence[Rational]], length: int) -> int:
    """
    Dimension of the span of vectors.

    :param vectors: Vectors of the given length.
    :param length: Ambient dimension.
    :return: The rank.
    """
    if not vectors:
        return 0
    return Matrix(vectors, ncols=length).rank()


def complete_basis(
    vectors: Sequence[Sequence[Rational]], length: int
) -> List[List[Fraction]]:
    """
    Unit vectors completing a spanning set to a basis of the whole space.

    :param vectors: Vectors spanning a subspace.
    :param length: Ambient dimension.
    :return: Unit vectors, in increasing coordinate order, whose span is
             a complement of the span of :code:`vectors`.
    """
    units = [
        [Fraction(1 if j == i else 0) for j in range(length)] for i in range(length)
    ]
    columns = [list(v) for v in vectors] + units
    if not columns:
        return []
    pivots = Matrix(_matrix_transpose(columns), ncols=len(columns)).pivot_columns()
    return [columns[p] for p in pivots if p >= len(vectors)]
