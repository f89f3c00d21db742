"""Exact integer and rational linear algebra.

Smith normal form with both transformation matrices, rational kernels, and
integer-lattice membership. Everything runs on Python ints and
fractions.Fraction; no floating point enters any routine in this module, so
results are decidable and reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionError, InputError

Rational = Union[int, Fraction]


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_data",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        data = []
        for row in rows:
            r = []
            for x in row:
                if not isinstance(x, int):
                    raise InputError(f"matrix entries must be int, got {type(x).__name__}")
            data.append(tuple(int(x) for x in row))
        if not data or not data[0]:
            raise InputError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise InputError("matrix rows must all have the same length")
        self._data: tuple[tuple[int, ...], ...] = tuple(data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise InputError("need at least one column")
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return len(self._data[0])

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view of all entries."""
        return tuple(x for row in self._data for x in row)

    def row_tuples(self) -> tuple[tuple[int, ...], ...]:
        return self._data

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self._data[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ot = other.transpose()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot.row_tuples()] for row in self._data]
        )

    def mul_vector(self, v: Sequence[Rational]) -> tuple[Rational, ...]:
        """Exact matrix-vector product; accepts int or Fraction entries."""
        if len(v) != self.cols:
            raise DimensionError(f"vector length {len(v)} does not match {self.cols} columns")
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self._data)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._data]!r})"


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular u, v and diagonal d with u @ a @ v == d."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        k = min(self.d.rows, self.d.cols)
        out = []
        for i in range(k):
            x = self.d[i, i]
            if x == 0:
                break
            out.append(x)
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _smallest_nonzero(a: list[list[int]], t: int, m: int, n: int) -> tuple[int, int] | None:
    best = None
    best_abs = None
    for i in range(t, m):
        for j in range(t, n):
            x = a[i][j]
            if x and (best_abs is None or abs(x) < best_abs):
                best, best_abs = (i, j), abs(x)
                if best_abs == 1:
                    return best
    return best


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Compute the Smith normal form of an integer matrix.

    Returns u, d, v with u @ a @ v == d, u and v unimodular, d diagonal with
    non-negative entries satisfying d[i] | d[i+1]. Pivots are chosen as the
    smallest nonzero entry in absolute value, which keeps intermediate growth
    modest on the small matrices this package produces.
    """
    m, n = a.rows, a.cols
    A = [list(row) for row in a.row_tuples()]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i: int, k: int) -> None:
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int) -> None:
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def row_sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k
        A[i] = [x - q * y for x, y in zip(A[i], A[k])]
        U[i] = [x - q * y for x, y in zip(U[i], U[k])]

    def col_sub(j: int, k: int, q: int) -> None:
        # col_j -= q * col_k
        for row in A:
            row[j] -= q * row[k]
        for row in V:
            row[j] -= q * row[k]

    t = 0
    while t < min(m, n):
        pos = _smallest_nonzero(A, t, m, n)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_sub(i, t, q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_sub(j, t, q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                pos = _smallest_nonzero(A, t, m, n)
                swap_rows(t, pos[0])
                swap_cols(t, pos[1])
                continue
            # column and row t are clear; enforce divisibility of the trailing block
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)  # row_t += row_offender, reintroduces entries to grind down
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return SmithDecomposition(IntMatrix(U), IntMatrix(A), IntMatrix(V))


def determinant(a: IntMatrix) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    if a.rows != a.cols:
        raise DimensionError("determinant requires a square matrix")
    n = a.rows
    M = [list(row) for row in a.row_tuples()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_rank(a: IntMatrix) -> int:
    """Rank over the rationals by Gaussian elimination with Fraction arithmetic."""
    rows = [[Fraction(x) for x in row] for row in a.row_tuples()]
    rank = 0
    for c in range(a.cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][c]
        rows[rank] = [x / pv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def normalize_int_vector(v: Sequence[Rational]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with positive leading entry."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise InputError("cannot normalize the zero vector")
    den = lcm(*[x.denominator for x in fracs])
    ints = [int(x * den) for x in fracs]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rational_kernel(a: IntMatrix) -> list[tuple[int, ...]]:
    """Basis of the rational null space, one vector per free column.

    Each basis vector is scaled to integer entries with gcd 1 and positive
    first nonzero entry, so the basis is canonical for a given input.
    """
    n = a.cols
    rows = [[Fraction(x) for x in row] for row in a.row_tuples()]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for rr, c in enumerate(pivots):
            vec[c] = -rows[rr][free]
        basis.append(normalize_int_vector(vec))
    return basis


def lattice_member(basis: IntMatrix, vector: Sequence[Rational]) -> bool:
    """Is `vector` an integer combination of the columns of `basis`?

    Decided exactly through the Smith decomposition: with u a v = d and
    w = u . vector, membership holds iff w_i is divisible by d_i on the
    diagonal range and w_i = 0 beyond the rank.
    """
    if len(vector) != basis.rows:
        raise DimensionError(f"vector length {len(vector)} does not match {basis.rows} rows")
    dec = smith_normal_form(basis)
    w = dec.u.mul_vector([Fraction(x) for x in vector])
    factors = dec.invariant_factors
    r = len(factors)
    for i, x in enumerate(w):
        if i < r:
            q = Fraction(x) / factors[i]
            if q.denominator != 1:
                return False
        elif x != 0:
            return False
    return True
