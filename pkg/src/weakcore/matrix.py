"""Dense exact matrices over the rationals.

Elimination is plain rational Gauss-Jordan. Entry size can grow quickly for
high powers (the Drazin route forms ``A^(2k+1)``), so sizes are expected to
stay small, which is the regime every caller in this package lives in.

Annihilator conditions on ring elements translate to subspace conditions on
matrices:

* left annihilators:  ``∘c ⊆ ∘b``  iff  ``col(b) ⊆ col(c)``
* right annihilators: ``c∘ ⊆ b∘``  iff  ``row(b) ⊆ row(c)``
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from weakcore.scalar import rat_format, rat_parse


class DimensionError(ValueError):
    pass


class Matrix:
    """Immutable rows x cols grid of Fractions with the transpose involution."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Iterable[Iterable[object]]):
        grid = tuple(tuple(_coerce(x) for x in row) for row in data)
        if not grid:
            raise DimensionError("matrix needs at least one row")
        width = len(grid[0])
        if width == 0 or any(len(row) != width for row in grid):
            raise DimensionError("rows must be non-empty and of equal length")
        self.rows = len(grid)
        self.cols = width
        self._data = grid
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """Matrix unit E_ij of size n."""
        return cls([[int(r == i and c == j) for c in range(n)] for r in range(n)])

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "Matrix":
        return cls([[rat_parse(x) for x in row] for row in rows])

    def to_strings(self) -> list[list[str]]:
        return [[rat_format(x) for x in row] for row in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._data for x in row)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._data[i][j]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._data)
        return self._hash

    def __add__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        _same_shape(self, other)
        return Matrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self._data, other._data)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-x for x in row] for row in self._data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return multiply(self, other)

    def __mul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        s = _coerce(scalar)
        return Matrix([[s * x for x in row] for row in self._data])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Matrix":
        return power(self, n)

    def __repr__(self) -> str:
        return f"Matrix({self.to_strings()})"

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _coerce(x: object) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return rat_parse(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact matrix entry")


def _same_shape(a: Matrix, b: Matrix) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionError(f"square matrix required, got {a.rows}x{a.cols}")


def transpose(a: Matrix) -> Matrix:
    return Matrix(zip(*a._data))


def multiply(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = tuple(zip(*b._data))
    return Matrix([[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a._data])


def power(a: Matrix, n: int) -> Matrix:
    _require_square(a)
    if n < 0:
        raise ValueError("negative powers are not defined here")
    result = Matrix.identity(a.rows)
    base = a
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def hstack(*blocks: Matrix) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise DimensionError("hstack needs equal row counts")
    return Matrix([sum((list(b.row(i)) for b in blocks), []) for i in range(rows)])


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.cols for b in blocks)
    out = []
    offset = 0
    for b in blocks:
        for row in b:
            out.append([0] * offset + list(row) + [0] * (n - offset - b.cols))
        offset += b.cols
    return Matrix(out)


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    rank: int
    pivot_cols: tuple[int, ...]
    transform: Matrix


def rref_rank(a: Matrix) -> RrefResult:
    """Gauss-Jordan elimination on ``[A | I]``; ``transform @ A == rref``."""
    m, n = a.shape
    work = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if work[i][c] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(m):
            f = work[i][c]
            if i != r and f != 0:
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return RrefResult(
        rref=Matrix([row[:n] for row in work]),
        rank=r,
        pivot_cols=tuple(pivots),
        transform=Matrix([row[n:] for row in work]),
    )


def rank(a: Matrix) -> int:
    return rref_rank(a).rank


def inverse(a: Matrix) -> Matrix:
    _require_square(a)
    res = rref_rank(a)
    if res.rank != a.rows:
        raise ZeroDivisionError("matrix is singular")
    return res.transform


def full_rank_factorization(a: Matrix) -> tuple[Matrix, Matrix]:
    """Return (F, G) with A = F G, F the pivot columns of A, G the nonzero rref rows."""
    res = rref_rank(a)
    if res.rank == 0:
        raise ValueError("zero matrix has no full rank factorization")
    f = Matrix([[a[i, j] for j in res.pivot_cols] for i in range(a.rows)])
    g = Matrix([res.rref.row(i) for i in range(res.rank)])
    return f, g


def column_space_contains(a: Matrix, b: Matrix) -> bool:
    """True iff col(B) ⊆ col(A)."""
    if a.rows != b.rows:
        raise DimensionError("column spaces live in different dimensions")
    return rank(hstack(a, b)) == rank(a)


def column_space_equal(a: Matrix, b: Matrix) -> bool:
    if a.rows != b.rows:
        raise DimensionError("column spaces live in different dimensions")
    r = rank(hstack(a, b))
    return r == rank(a) == rank(b)


def row_space_contains(a: Matrix, b: Matrix) -> bool:
    """True iff row(B) ⊆ row(A)."""
    return column_space_contains(a.T, b.T)


def annihilator_containment_left(b: Matrix, c: Matrix) -> bool:
    """Decide ∘c ⊆ ∘b, i.e. every z with zc = 0 also has zb = 0."""
    _require_square(b)
    _same_shape(b, c)
    return column_space_contains(c, b)


def annihilator_containment_right(b: Matrix, c: Matrix) -> bool:
    """Decide c∘ ⊆ b∘, i.e. every z with cz = 0 also has bz = 0."""
    _require_square(b)
    _same_shape(b, c)
    return row_space_contains(c, b)
