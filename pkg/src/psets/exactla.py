"""Exact dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`. Each matrix also keeps an integer
copy of itself in which row ``i`` has been multiplied by the lcm of its
denominators. Row scaling preserves the rank of every submatrix, so rank
and determinant queries run on integers through the fraction-free kernel in
:mod:`psets._backend`.

Indices are 1-based at every public boundary.
"""

from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC

from psets import _backend
from psets.errors import (
    AsymmetricMatrix,
    DimensionMismatch,
    IndexOutOfRange,
    SingularMatrix,
)

Rational = Fraction

__all__ = [
    "Rational",
    "Matrix",
    "SymMatrix",
    "to_rational",
    "index_set",
    "identity",
    "zeros",
    "matmul",
    "submatrix_keep",
    "submatrix_delete",
    "principal",
    "rank",
    "nullity",
    "det",
    "inverse",
    "row_in_span",
    "dependent_on_others",
]


def to_rational(x):
    """Convert ``x`` to a Fraction, refusing floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"floating-point entry {x!r} not allowed; use int, Fraction or 'p/q'")
    if isinstance(x, (int, str, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


def _scale_row(row):
    s = lcm(*(q.denominator for q in row)) if row else 1
    return [int(q.numerator * (s // q.denominator)) for q in row], s


class Matrix:
    """Immutable dense rational matrix, possibly rectangular."""

    __slots__ = ("rows", "cols", "entries", "_int", "_scales")

    def __init__(self, data, cols=None):
        entries = tuple(tuple(to_rational(x) for x in row) for row in data)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for k, row in enumerate(entries, start=1):
            if len(row) != cols:
                raise DimensionMismatch(f"row {k} has {len(row)} entries, expected {cols}")
        ints, scales = [], []
        for row in entries:
            r, s = _scale_row(row)
            ints.append(r)
            scales.append(s)
        self._set(entries, len(entries), cols, tuple(map(tuple, ints)), tuple(scales))

    def _set(self, entries, rows, cols, ints, scales):
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_int", ints)
        object.__setattr__(self, "_scales", scales)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _trusted(cls, entries, rows, cols, ints, scales):
        obj = cls.__new__(cls)
        obj._set(entries, rows, cols, ints, scales)
        return obj

    @property
    def shape(self):
        return self.rows, self.cols

    def entry(self, i, j):
        """Entry in row ``i``, column ``j`` (1-based)."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def row(self, i):
        if not 1 <= i <= self.rows:
            raise IndexOutOfRange(f"row {i} outside 1..{self.rows}")
        return self.entries[i - 1]

    def tolist(self):
        return [list(r) for r in self.entries]

    def transpose(self):
        return Matrix([[r[j] for r in self.entries] for j in range(self.cols)], cols=self.rows)

    def is_zero(self):
        return not any(any(r) for r in self._int)

    def _sub(self, rows0, cols0):
        """Submatrix by 0-based index sequences, without validation."""
        entries = tuple(tuple(self.entries[i][j] for j in cols0) for i in rows0)
        ints = tuple(tuple(self._int[i][j] for j in cols0) for i in rows0)
        scales = tuple(self._scales[i] for i in rows0)
        return Matrix._trusted(entries, len(rows0), len(cols0), ints, scales)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)
        return f"{type(self).__name__}({self.rows}x{self.cols}: [{body}])"


class SymMatrix(Matrix):
    """Immutable symmetric rational matrix of order ``n``."""

    __slots__ = ()

    def __init__(self, data):
        data = [list(r) for r in data]
        n = len(data)
        super().__init__(data, cols=n)
        e = self.entries
        for i in range(n):
            for j in range(i + 1, n):
                if e[i][j] != e[j][i]:
                    raise AsymmetricMatrix(
                        f"entry ({i + 1}, {j + 1}) = {e[i][j]} differs from ({j + 1}, {i + 1}) = {e[j][i]}"
                    )

    @property
    def n(self):
        return self.rows

    def _principal(self, idx0):
        m = self._sub(idx0, idx0)
        return SymMatrix._trusted(m.entries, m.rows, m.cols, m._int, m._scales)


def identity(n):
    return SymMatrix([[int(i == j) for j in range(n)] for i in range(n)])


def zeros(rows, cols=None):
    if cols is None:
        return SymMatrix([[0] * rows for _ in range(rows)])
    return Matrix([[0] * cols for _ in range(rows)], cols=cols)


def matmul(a, b):
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    return Matrix(
        [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in bt] for r in a.entries],
        cols=b.cols,
    )


def index_set(indices, n):
    """Validate a collection of 1-based indices against order ``n``.

    Returns a strictly increasing tuple. Duplicates and out-of-range members
    raise :class:`IndexOutOfRange`.
    """
    if isinstance(indices, int):
        indices = (indices,)
    items = list(indices)
    for i in items:
        if isinstance(i, bool) or not isinstance(i, int):
            raise TypeError(f"index {i!r} is not an integer")
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"index {i} outside 1..{n}")
    out = tuple(sorted(set(items)))
    if len(out) != len(items):
        raise IndexOutOfRange(f"duplicate index in {items}")
    return out


def _complement0(alpha, n):
    drop = set(alpha)
    return [i for i in range(n) if i + 1 not in drop]


def submatrix_keep(a, rows, cols):
    """``A[rows, cols]`` as a general :class:`Matrix`."""
    r = index_set(rows, a.rows)
    c = index_set(cols, a.cols)
    return a._sub([i - 1 for i in r], [j - 1 for j in c])


def principal(a, alpha):
    """``A[alpha]``: keep the rows and columns indexed by ``alpha``."""
    alpha = index_set(alpha, a.n)
    return a._principal([i - 1 for i in alpha])


def submatrix_delete(a, alpha):
    """``A(alpha)``: delete the rows and columns indexed by ``alpha``."""
    alpha = index_set(alpha, a.n)
    return a._principal(_complement0(alpha, a.n))


def _rank_int(ints, ncols):
    return _backend.eliminate(ints, ncols)[0]


def rank(m):
    return _rank_int(m._int, m.cols)


def nullity(m):
    """Dimension of the (right) kernel: columns minus rank."""
    return m.cols - rank(m)


def det(a):
    if a.rows != a.cols:
        raise DimensionMismatch(f"determinant of non-square {a.rows}x{a.cols} matrix")
    r, pivot, sign = _backend.eliminate(a._int, a.cols)
    if r < a.rows:
        return Fraction(0)
    scale = 1
    for s in a._scales:
        scale *= s
    return Fraction(sign * pivot, scale)


def inverse(a):
    """Exact inverse by Gauss-Jordan elimination; raises SingularMatrix."""
    n = a.n
    if det(a) == 0:
        raise SingularMatrix(f"{n}x{n} matrix is singular")
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.entries)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrix(f"{n}x{n} matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        prow = [x / p for x in aug[col]]
        aug[col] = prow
        for r in range(n):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return SymMatrix([row[n:] for row in aug])


def row_in_span(v, m):
    """True iff the row vector ``v`` lies in the row space of ``m``."""
    v = [to_rational(x) for x in v]
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.cols} columns")
    iv, _ = _scale_row(v)
    if not any(iv):
        return True
    base = _rank_int(m._int, m.cols)
    return _rank_int(m._int + (tuple(iv),), m.cols) == base


def dependent_on_others(a, i):
    """True iff row ``i`` of ``a`` is a combination of the other rows."""
    (i,) = index_set((i,), a.rows)
    others = a._sub([k for k in range(a.rows) if k != i - 1], range(a.cols))
    return row_in_span(a.entries[i - 1], others)
