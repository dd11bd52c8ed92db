"""Dense exact-integer matrices.

Entries are Python ints, so nothing ever overflows.  Matrices are immutable
and hashable; every operation returns a new value.  Empty shapes (0x0, 0xn,
nx0) are ordinary values: ``det`` of 0x0 is 1, its signature is 0, and it is
the neutral element of :func:`block_sum`.

Kronecker products put the left factor's index outermost, so
``tensor(a, b)[(i*rb + k, j*cb + l)] == a[i, j] * b[k, l]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare, NotSymmetric


class IntMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Sequence[int]] = (), shape=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if shape is None:
            rows = len(data)
            cols = len(data[0]) if rows else 0
        else:
            rows, cols = shape
            if len(data) != rows:
                raise DimensionMismatch(f"expected {rows} rows, got {len(data)}")
        if any(len(row) != cols for row in data):
            raise DimensionMismatch("ragged rows")
        if rows == 0 and cols and shape is None:
            raise DimensionMismatch("ambiguous empty matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)], shape=(rows, cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], shape=(n, n))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)],
                   shape=(n, n))

    @classmethod
    def _raw(cls, data, rows, cols) -> IntMatrix:
        # trusted constructor: data is already a tuple of int tuples
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "_data", data)
        return m

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> IntMatrix:
        return transpose(self)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list:
        return [list(r) for r in self._data]

    def entries(self):
        for r in self._data:
            yield from r

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> IntMatrix:
        """Rows ``r0:r1`` and columns ``c0:c1``."""
        data = tuple(r[c0:c1] for r in self._data[r0:r1])
        return IntMatrix._raw(data, len(data), max(0, min(c1, self.cols) - c0))

    def take(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> IntMatrix:
        data = tuple(tuple(self._data[i][j] for j in col_idx) for i in row_idx)
        return IntMatrix._raw(data, len(row_idx), len(col_idx))

    def is_zero(self) -> bool:
        return not any(self.entries())

    def is_symmetric(self) -> bool:
        return self.is_square and self == transpose(self)

    def is_skew(self) -> bool:
        return self.is_square and self == -transpose(self)

    def max_abs(self) -> int:
        return max((abs(x) for x in self.entries()), default=0)

    def bit_size(self) -> int:
        """Bit length of the largest entry in absolute value."""
        return self.max_abs().bit_length()

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        if self.rows == 0:
            return f"IntMatrix.zeros({self.rows}, {self.cols})"
        return f"IntMatrix({self.tolist()!r})"

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix._raw(tuple(tuple(c * x for x in r) for r in self._data),
                              self.rows, self.cols)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        data = tuple(tuple(x + y for x, y in zip(r, s))
                     for r, s in zip(self._data, other._data))
        return IntMatrix._raw(data, self.rows, self.cols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + (-other)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return multiply(self, other)


def as_matrix(x) -> IntMatrix:
    return x if isinstance(x, IntMatrix) else IntMatrix(x)


def multiply(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    bt = transpose(b)._data
    data = tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in bt) for r in a._data)
    return IntMatrix._raw(data, a.rows, b.cols)


def transpose(a: IntMatrix) -> IntMatrix:
    if not a.rows:
        return IntMatrix._raw(tuple(() for _ in range(a.cols)), a.cols, 0)
    return IntMatrix._raw(tuple(zip(*a._data)), a.cols, a.rows)


def congruence(p: IntMatrix, a: IntMatrix) -> IntMatrix:
    """Return ``p @ a @ p.T``."""
    if not a.is_square:
        raise NotSquare(f"congruence needs a square matrix, got {a.shape}")
    if p.cols != a.rows:
        raise DimensionMismatch(f"witness {p.shape} does not act on {a.shape}")
    return multiply(multiply(p, a), transpose(p))


def block_sum(*blocks: IntMatrix) -> IntMatrix:
    """Block-diagonal matrix ``diag(blocks...)``; square blocks only."""
    for b in blocks:
        if not b.is_square:
            raise NotSquare(f"block sum of non-square {b.shape}")
    n = sum(b.rows for b in blocks)
    data = []
    off = 0
    for b in blocks:
        for r in b._data:
            data.append((0,) * off + r + (0,) * (n - off - b.cols))
        off += b.rows
    return IntMatrix._raw(tuple(data), n, n)


def direct_sum(*blocks: IntMatrix) -> IntMatrix:
    """Block-diagonal matrix allowing rectangular blocks."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = []
    off = 0
    for b in blocks:
        for r in b._data:
            data.append((0,) * off + r + (0,) * (cols - off - b.cols))
        off += b.cols
    return IntMatrix._raw(tuple(data), rows, cols)


def tensor(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    data = tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a._data for rb in b._data
    )
    return IntMatrix._raw(data, a.rows * b.rows, a.cols * b.cols)


def vstack(*parts: IntMatrix) -> IntMatrix:
    cols = {p.cols for p in parts if p.rows}
    if len(cols) > 1:
        raise DimensionMismatch("vstack of differing widths")
    width = cols.pop() if cols else (parts[0].cols if parts else 0)
    data = tuple(r for p in parts for r in p._data)
    return IntMatrix._raw(data, len(data), width)


def permutation_matrix(order: Sequence[int]) -> IntMatrix:
    """Matrix whose row ``i`` is the unit vector ``e_{order[i]}``.

    Acting by congruence, it reorders coordinates so that new coordinate ``i``
    is old coordinate ``order[i]``.
    """
    n = len(order)
    if sorted(order) != list(range(n)):
        raise ValueError("not a permutation")
    return IntMatrix._raw(tuple(tuple(int(j == o) for j in range(n)) for o in order), n, n)


def determinant(a: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    if not a.is_square:
        raise NotSquare(f"determinant of non-square {a.shape}")
    n = a.rows
    if n == 0:
        return 1
    m = [list(r) for r in a._data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]



def complete_basis(rows: Sequence[Sequence[int]], n: int) -> tuple:
    """Extend primitive ``rows`` (vectors in ``Z^n``) to a unimodular matrix.

    Returns ``(p, p_inv)`` where the first ``len(rows)`` rows of ``p`` are
    ``rows``.  Column operations reduce ``rows`` to ``[I | 0]`` while ``p_inv``
    records them; ``p`` receives the inverse operations as row operations.
    Raises ``ValueError`` if the rows do not span a primitive sublattice.
    """
    h = len(rows)
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m) or h > n:
        raise DimensionMismatch(f"{h} rows of length {n} cannot start a basis")
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(i, j, c):
        # col_i -= c * col_j
        for r in m:
            r[i] -= c * r[j]
        for r in u:
            r[i] -= c * r[j]
        p[j] = [a + c * b for a, b in zip(p[j], p[i])]

    def col_swap(i, j):
        for r in m + u:
            r[i], r[j] = r[j], r[i]
        p[i], p[j] = p[j], p[i]

    for k in range(h):
        row = m[k]
        while True:
            nz = [j for j in range(k, n) if row[j]]
            if not nz:
                raise ValueError("rows are not linearly independent")
            j = min(nz, key=lambda t: abs(row[t]))
            if len(nz) == 1:
                break
            for i in nz:
                if i != j:
                    col_op(i, j, row[i] // row[j])
        if j != k:
            col_swap(j, k)
        if abs(row[k]) != 1:
            raise ValueError("rows do not span a primitive sublattice")
        if row[k] == -1:
            for r in m + u:
                r[k] = -r[k]
            p[k] = [-a for a in p[k]]
        for i in range(n):
            if i != k and row[i]:
                col_op(i, k, row[i])
    return IntMatrix(p, shape=(n, n)), IntMatrix(u, shape=(n, n))


def is_unimodular(a: IntMatrix) -> bool:
    return determinant(a) in (1, -1)


def is_integrally_invertible(p: IntMatrix) -> bool:
    return p.is_square and determinant(p) in (1, -1)


def inertia(a: IntMatrix) -> tuple:
    """Counts ``(positive, negative, zero)`` of a symmetric matrix.

    Symmetric Gaussian elimination over Q.  A nonzero diagonal entry is used
    as a 1x1 pivot; if the whole diagonal vanishes a 2x2 pivot
    ``[[0, b], [b, 0]]`` is used, which contributes one of each sign.
    """
    if not a.is_symmetric():
        raise NotSymmetric("signature needs a symmetric matrix")
    s = [[Fraction(x) for x in r] for r in a._data]
    pos = neg = zero = 0
    while s:
        n = len(s)
        piv = next((i for i in range(n) if s[i][i] != 0), None)
        if piv is not None:
            d = s[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [r for r in range(n) if r != piv]
            s = [[s[r][c] - s[r][piv] * s[piv][c] / d for c in rest] for r in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if s[i][j] != 0), None)
        if pair is None:
            zero += n
            break
        i, j = pair
        b = s[i][j]
        pos += 1
        neg += 1
        rest = [r for r in range(n) if r not in pair]
        s = [[s[r][c] - (s[r][i] * s[j][c] + s[r][j] * s[i][c]) / b for c in rest]
             for r in rest]
    return pos, neg, zero


def signature(a: IntMatrix) -> int:
    pos, neg, _ = inertia(a)
    return pos - neg


def rank(a: IntMatrix) -> int:
    """Rank over Q (fraction-free row reduction)."""
    m = [list(r) for r in a._data]
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, a.rows):
            if m[i][c]:
                f, g = m[i][c], m[r][c]
                m[i] = [g * x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r
