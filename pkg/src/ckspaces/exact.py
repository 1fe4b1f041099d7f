"""Exact rational scalars, dense rational matrices, and the linear-algebra
kernels (echelon spans, Pfaffian, Cayley orthogonals) everything else uses.

All arithmetic is exact: entries are `fractions.Fraction`, stored in lowest
terms with positive denominator, and no rounding ever occurs.  Every value is
immutable after construction, so the whole module is safe for concurrent use.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ShapeError

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def format_rational(x: Fraction) -> str:
    """Render a rational as "p/q", or plain "p" when the denominator is 1."""
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Parse the "p/q" (or "p") wire format; rejects floats and loose syntax."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise DomainError(f"not a rational literal: {text!r}")
    return Fraction(text)


class Matrix:
    """Immutable dense matrix of exact rationals.

    Matrix product is `@`, scalar product is `*`.  Equality is entrywise
    exact equality, and instances are hashable.
    """

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ShapeError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ShapeError("ragged rows")
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        """Square block-diagonal sum of square blocks."""
        n = sum(b.rows for b in blocks)
        out = [[_ZERO] * n for _ in range(n)]
        off = 0
        for b in blocks:
            if b.rows != b.cols:
                raise ShapeError("block_diag needs square blocks")
            for i, row in enumerate(b.data):
                out[off + i][off:off + b.cols] = row
            off += b.rows
        return cls(out)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self.data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in row] for row in self.data]})"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(tuple(x + y for x, y in zip(r, s))
                      for r, s in zip(self.data, other.data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(tuple(x - y for x, y in zip(r, s))
                      for r, s in zip(self.data, other.data))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(-x for x in row) for row in self.data)

    def __mul__(self, scalar) -> "Matrix":
        c = Fraction(scalar)
        return Matrix(tuple(c * x for x in row) for row in self.data)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        n, p = self.rows, other.cols
        bdata = other.data
        out = []
        for i in range(n):
            arow = self.data[i]
            acc = [_ZERO] * p
            for k, x in enumerate(arow):
                if x:
                    brow = bdata[k]
                    for j in range(p):
                        y = brow[j]
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.data))

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ShapeError("trace needs a square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.data[i][j] == -self.data[j][i]
                   for i in range(self.rows) for j in range(i, self.cols))

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.data[i][j] == (_ONE if i == j else _ZERO)
                   for i in range(self.rows) for j in range(self.cols))

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major entry tuple."""
        return tuple(x for row in self.data for x in row)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: blocks a[i][j] * b."""
    rb, cb = b.rows, b.cols
    return Matrix([
        [a.data[i // rb][j // cb] * b.data[i % rb][j % cb]
         for j in range(a.cols * cb)]
        for i in range(a.rows * rb)
    ])


def commutator(a: Matrix, b: Matrix) -> Matrix:
    """ab - ba for square matrices of the same size."""
    if a.rows != a.cols or a.shape != b.shape:
        raise ShapeError("commutator needs equal-size square matrices")
    return a @ b - b @ a


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    if m.rows != m.cols:
        raise ShapeError("determinant needs a square matrix")
    n = m.rows
    a = [list(row) for row in m.data]
    det = _ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return _ZERO
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                arow, prow = a[r], a[col]
                for c in range(col, n):
                    arow[c] -= f * prow[c]
    return det


def inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination; DomainError if singular."""
    if m.rows != m.cols:
        raise ShapeError("inverse needs a square matrix")
    n = m.rows
    a = [list(row) + [_ONE if i == j else _ZERO for j in range(n)]
         for i, row in enumerate(m.data)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise DomainError("matrix is singular")
        if piv != col:
            a[piv], a[col] = a[col], a[piv]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
        prow = a[col]
        for r in range(n):
            if r != col:
                f = a[r][col]
                if f:
                    arow = a[r]
                    for c in range(col, 2 * n):
                        arow[c] -= f * prow[c]
    return Matrix([row[n:] for row in a])


def pfaffian(m: Matrix) -> Fraction:
    """Exact Pfaffian of an even-size skew-symmetric matrix.

    Uses congruence elimination: paired row/column shears (determinant-one
    congruences, which leave the Pfaffian fixed) reduce the matrix to a
    block diagonal of 2x2 skew blocks, whose Pfaffian is the pivot product;
    row/column swaps each flip the sign.  Cubic cost, exact divisions only.
    """
    if m.rows != m.cols:
        raise ShapeError("pfaffian needs a square matrix")
    n = m.rows
    if n % 2 != 0:
        raise DomainError("pfaffian needs even size")
    if not m.is_skew():
        raise DomainError("pfaffian needs an exactly skew-symmetric matrix")
    a = [list(row) for row in m.data]
    sign = 1
    prod = _ONE
    for k in range(0, n - 1, 2):
        piv = next((j for j in range(k + 1, n) if a[k][j]), None)
        if piv is None:
            return _ZERO
        if piv != k + 1:
            a[piv], a[k + 1] = a[k + 1], a[piv]
            for row in a:
                row[piv], row[k + 1] = row[k + 1], row[piv]
            sign = -sign
        p = a[k][k + 1]
        prod *= p
        for i in range(k + 2, n):
            # clear a[k][i] with column k+1, then a[k+1][i] with column k,
            # mirroring each column shear with the matching row shear
            c = -a[k][i] / p
            if c:
                for t in range(n):
                    a[t][i] += c * a[t][k + 1]
                for t in range(n):
                    a[i][t] += c * a[k + 1][t]
            d = a[k + 1][i] / p
            if d:
                for t in range(n):
                    a[t][i] += d * a[t][k]
                for t in range(n):
                    a[i][t] += d * a[k][t]
    return prod if sign > 0 else -prod


class RowSpan:
    """Incrementally built reduced echelon basis of flattened matrices.

    Rows are kept sparse (column -> value) and fully reduced: pivots are 1,
    each pivot column is cleared in every other row, and rows are ordered by
    pivot column.  The reduced form of a span is unique, so the resulting
    basis does not depend on insertion order of a spanning set.
    """

    def __init__(self, shape: tuple[int, int]):
        self.shape = shape
        self._rows: list[dict[int, Fraction]] = []
        self._pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: dict[int, Fraction]) -> dict[int, Fraction]:
        for pivot, row in zip(self._pivots, self._rows):
            c = vec.get(pivot)
            if c:
                for col, val in row.items():
                    new = vec.get(col, _ZERO) - c * val
                    if new:
                        vec[col] = new
                    else:
                        vec.pop(col, None)
        return vec

    def add(self, m: Matrix) -> bool:
        """Add a matrix to the span; True if it was independent of it."""
        if m.shape != self.shape:
            raise ShapeError("span members must share one shape")
        vec = self._reduce(_to_sparse(m))
        if not vec:
            return False
        pivot = min(vec)
        inv = _ONE / vec[pivot]
        if inv != 1:
            vec = {col: inv * val for col, val in vec.items()}
        for row in self._rows:
            c = row.get(pivot)
            if c:
                for col, val in vec.items():
                    new = row.get(col, _ZERO) - c * val
                    if new:
                        row[col] = new
                    else:
                        row.pop(col, None)
        at = next((i for i, p in enumerate(self._pivots) if p > pivot),
                  len(self._pivots))
        self._rows.insert(at, vec)
        self._pivots.insert(at, pivot)
        return True

    def contains(self, m: Matrix) -> bool:
        if m.shape != self.shape:
            return False
        return not self._reduce(_to_sparse(m))

    def basis(self) -> list[Matrix]:
        return [_from_sparse(row, self.shape) for row in self._rows]


def _to_sparse(m: Matrix) -> dict[int, Fraction]:
    cols = m.cols
    return {i * cols + j: x
            for i, row in enumerate(m.data) for j, x in enumerate(row) if x}


def _from_sparse(vec: dict[int, Fraction], shape: tuple[int, int]) -> Matrix:
    rows, cols = shape
    out = [[_ZERO] * cols for _ in range(rows)]
    for flat, val in vec.items():
        out[flat // cols][flat % cols] = val
    return Matrix(out)


def span_basis(mats: Sequence[Matrix]) -> list[Matrix]:
    """Deterministic reduced-echelon basis of the linear span of matrices.

    Matrices are treated as row-major flat vectors; the output size is the
    dimension of the span.  Empty input yields an empty basis.
    """
    if not mats:
        return []
    span = RowSpan(mats[0].shape)
    for m in mats:
        span.add(m)
    return span.basis()


_LCG_MULTIPLIER = 6364136223846793005
_LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """Fixed 64-bit linear congruential generator, high 32 bits emitted.

    Pinned constants make every seeded test sequence bit-reproducible on
    any platform.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u32(self) -> int:
        self.state = (self.state * _LCG_MULTIPLIER + _LCG_INCREMENT) & _MASK64
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        return lo + self.next_u32() % (hi - lo + 1)

    def rational(self, num_bound: int, den_bound: int) -> Fraction:
        """Fraction with numerator in [-num_bound, num_bound], denominator in [1, den_bound]."""
        return Fraction(self.randint(-num_bound, num_bound),
                        self.randint(1, den_bound))

    def rational_vector(self, n: int, num_bound: int, den_bound: int) -> tuple[Fraction, ...]:
        return tuple(self.rational(num_bound, den_bound) for _ in range(n))


def random_skew(rng: Lcg, size: int, num_bound: int = 2, den_bound: int = 3) -> Matrix:
    """Seeded skew-symmetric matrix with small rational entries."""
    out = [[_ZERO] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            x = rng.rational(num_bound, den_bound)
            out[i][j] = x
            out[j][i] = -x
    return Matrix(out)


def cayley_transform(s: Matrix) -> Matrix:
    """(I - s)(I + s)^-1; exactly orthogonal whenever s is skew.

    For real skew s the factor I + s is always invertible (its determinant
    is a product of 1 + t^2 terms), so no singular case arises.
    """
    if s.rows != s.cols:
        raise ShapeError("cayley_transform needs a square matrix")
    eye = Matrix.identity(s.rows)
    return (eye - s) @ inverse(eye + s)


def cayley_orthogonal(seed: int, size: int, det_sign: int = 1) -> Matrix:
    """Seeded rational orthogonal matrix with the requested determinant sign.

    The Cayley transform of a seeded random small skew matrix always has
    determinant +1; for -1 the first coordinate is reflected afterwards.
    Deterministic per seed.
    """
    if size < 2 or size % 2 != 0:
        raise DomainError("size must be even and at least 2")
    if det_sign not in (1, -1):
        raise DomainError("det_sign must be +1 or -1")
    q = cayley_transform(random_skew(Lcg(seed), size))
    if det_sign == -1:
        q = Matrix((tuple(-x for x in row) if i == 0 else row)
                   for i, row in enumerate(q.data))
    return q


def matrix_to_lists(m: Matrix) -> list[list[str]]:
    """Row-major JSON form: nested arrays of "p/q" strings."""
    return [[format_rational(x) for x in row] for row in m.data]


def matrix_from_lists(rows, expect_shape: tuple[int, int] | None = None) -> Matrix:
    """Parse the JSON wire form back into a Matrix."""
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DomainError("matrix document must be a list of rows")
    m = Matrix([[parse_rational(x) for x in row] for row in rows])
    if expect_shape is not None and m.shape != expect_shape:
        raise DomainError(f"matrix has shape {m.shape}, expected {expect_shape}")
    return m
