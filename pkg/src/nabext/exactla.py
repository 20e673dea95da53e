"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Matrices are small, dense and
immutable; every routine here is plain Gaussian elimination with pivoting on
the first nonzero entry, so results are deterministic and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction
Vector = tuple  # tuple of Fraction


class DimensionError(ValueError):
    """Raised when shapes of matrices, vectors or maps do not agree."""


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("refusing to coerce a bool to a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    num, _, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if den else 1
    except ValueError:
        raise ValueError(f"not a rational: {s!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vec(values: Iterable) -> Vector:
    return tuple(Q(v) for v in values)


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vadd(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, v: Sequence[Fraction]) -> Vector:
    s = Q(s)
    return tuple(s * a for a in v)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(Q(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionError("row count needed for a matrix with no columns")
            rows = len(columns[0])
        for c in columns:
            if len(c) != rows:
                raise DimensionError("ragged columns")
        return cls(rows, len(columns),
                   tuple(Q(columns[j][i]) for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, s) -> "Matrix":
        s = Q(s)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other[k, j] for k in range(self.cols) if r[k]), Fraction(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shapes {self.shape} and {other.shape} differ")


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    rows = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m.rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return rows[:r], pivots


def mat_rank(m: Matrix) -> int:
    return len(rref(m)[1])


def _kernel_from_rref(red: list, pivots: list, cols: int) -> list[Vector]:
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * cols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def mat_nullspace(m: Matrix) -> list[Vector]:
    """Canonical kernel basis: free variables set to unit vectors in index order."""
    red, pivots = rref(m)
    return _kernel_from_rref(red, pivots, m.cols)


@dataclass(frozen=True)
class AffineSolution:
    particular: Optional[Vector]
    kernel_basis: tuple

    @property
    def consistent(self) -> bool:
        return self.particular is not None


def solve_affine(m: Matrix, b: Sequence) -> AffineSolution:
    """Solve ``m x = b``; free variables of the particular solution are zero."""
    b = vec(b)
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} equations")
    aug = Matrix(m.rows, m.cols + 1,
                 tuple(x for i in range(m.rows) for x in m.row(i) + (b[i],)))
    red, pivots = rref(aug)
    kernel = tuple(mat_nullspace(m))
    if pivots and pivots[-1] == m.cols:
        return AffineSolution(None, kernel)
    x = [Fraction(0)] * m.cols
    for row, p in zip(red, pivots):
        x[p] = row[m.cols]
    return AffineSolution(tuple(x), kernel)


def column_space_basis(m: Matrix) -> list[Vector]:
    """Pivot columns of ``m`` (a basis of its image, taken from the original columns)."""
    _, pivots = rref(m)
    return [m.column(c) for c in pivots]


def extend_to_quotient_basis(span: Sequence[Vector], candidates: Sequence[Vector]) -> list[Vector]:
    """Greedily pick candidates independent modulo ``span`` (and each other)."""
    chosen: list[Vector] = []
    current = list(span)
    rank = _rank_of_vectors(current)
    for v in candidates:
        r = _rank_of_vectors(current + [v])
        if r > rank:
            chosen.append(tuple(v))
            current.append(v)
            rank = r
    return chosen


def _rank_of_vectors(vs: Sequence[Vector]) -> int:
    if not vs:
        return 0
    return mat_rank(Matrix.from_rows(vs))
