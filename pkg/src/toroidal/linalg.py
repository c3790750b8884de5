"""Exact linear algebra over the rationals and over the integers.

Matrices are immutable tuples of tuples.  Entries may be ``Fraction`` or
``RatFun``; integer input is coerced to ``Fraction``.  Everything is exact:
Gaussian elimination never pivots for numerical stability, only for
non-vanishing.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .ratfun import RatFun

__all__ = [
    "Matrix",
    "dot",
    "primitive_vector",
    "smith_normal_form",
    "integer_kernel",
    "integer_rank",
    "integer_inverse",
]


def _coerce_entry(x):
    if isinstance(x, (Fraction, RatFun)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dot of vectors with different lengths")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    ints = [int(x) for x in v]
    if any(ints[i] != v[i] for i in range(len(v))):
        raise ValueError(f"not an integer vector: {v}")
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g <= 1:
        return tuple(ints)
    return tuple(x // g for x in ints)


class Matrix:
    """Immutable exact matrix supporting @, det and inverse."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(_coerce_entry(x) for x in r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        es = list(entries)
        n = len(es)
        return cls([[es[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, v) -> "Matrix":
        return cls([[x] for x in v])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch in matrix product")
            ot = other.transpose().rows
            return Matrix(
                [[dot(r, c) for c in ot] for r in self.rows]
            )
        if isinstance(other, (tuple, list)):
            if self.ncols != len(other):
                raise ValueError("shape mismatch in matrix-vector product")
            return tuple(dot(r, other) for r in self.rows)
        return NotImplemented

    def __rmatmul__(self, other):
        # row vector times matrix
        if isinstance(other, (tuple, list)):
            if self.nrows != len(other):
                raise ValueError("shape mismatch in vector-matrix product")
            return tuple(dot(other, self.col(j)) for j in range(self.ncols))
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix([[-x for x in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * x for x in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def map(self, f) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows])

    def is_integer(self) -> bool:
        return all(
            isinstance(x, Fraction) and x.denominator == 1 for r in self.rows for x in r
        )

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        sign = 1
        result = Fraction(1)
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k]), None)
            if piv is None:
                return Fraction(0) * result
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            result = result * a[k][k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                if a[i][k]:
                    f = a[i][k] * inv
                    for j in range(k, n):
                        a[i][j] = a[i][j] - f * a[k][j]
        return sign * result

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        a = [list(r) for r in self.rows]
        b = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k]), None)
            if piv is None:
                raise ZeroDivisionError("matrix is singular")
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                b[k], b[piv] = b[piv], b[k]
            inv = 1 / a[k][k]
            a[k] = [x * inv for x in a[k]]
            b[k] = [x * inv for x in b[k]]
            for i in range(n):
                if i != k and a[i][k]:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                    b[i] = [x - f * y for x, y in zip(b[i], b[k])]
        return Matrix(b)


def _int_rows(m: Matrix):
    out = []
    for r in m.rows:
        row = []
        for x in r:
            if not isinstance(x, Fraction) or x.denominator != 1:
                raise ValueError("integer matrix required")
            row.append(int(x))
        out.append(row)
    return out


def smith_normal_form(m: Matrix):
    """Return unimodular (U, D, V) with U @ m @ V == D diagonal.

    Diagonal entries are nonnegative and each divides the next.
    """
    a = _int_rows(m)
    nr = len(a)
    nc = len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row_dst += c * row_src, mirrored in U
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(nr, nc)):
        while True:
            # locate the entry of smallest nonzero magnitude in the block
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    x = abs(a[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    add_row(t, i, -q)
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    add_col(t, j, -q)
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            # enforce that the pivot divides the remaining block
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if t < nr and t < nc and a[t][t] < 0:
            negate_row(t)

    d = [[a[i][j] if i == j else 0 for j in range(nc)] for i in range(nr)]
    # off-diagonal entries must have been cleared
    assert d == a, "Smith reduction failed to diagonalize"
    return Matrix(u), Matrix(a), Matrix(v)


def integer_rank(m: Matrix) -> int:
    a = [[Fraction(x) for x in r] for r in _int_rows(m)]
    nr, nc = len(a), len(a[0]) if a else 0
    rank = 0
    row = 0
    for col in range(nc):
        piv = next((i for i in range(row, nr) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for i in range(nr):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


def integer_kernel(m: Matrix):
    """Basis of the saturated lattice {x : m @ x == 0}, as a tuple of columns.

    The basis spans ker(m) over Q intersected with Z^n, so any integer
    solution is an integer combination of the returned vectors.
    """
    _, d, v = smith_normal_form(m)
    nr, nc = m.nrows, m.ncols
    cols = []
    for j in range(nc):
        if j >= min(nr, nc) or d[j, j] == 0:
            cols.append(tuple(int(v[i, j]) for i in range(nc)))
    return tuple(cols)


def integer_inverse(m: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix, with integer entries."""
    inv = m.inverse()
    if not inv.is_integer():
        raise ValueError("matrix is not unimodular")
    return inv
