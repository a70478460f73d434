"""Vertex classification, the P-set definition and the theorem-level predicates.

Notation follows the usual conventions: ``A[a]`` keeps the rows and columns
indexed by ``a``, ``A(a)`` deletes them, and ``nu`` is nullity. A set ``a`` is
a P-set when ``nu(A(a)) = nu(A) + |a|``.
"""

import enum
from dataclasses import dataclass, field
from itertools import combinations

from psets.errors import (
    CardinalityTooSmall,
    IndexOutOfRange,
    InternalInvariantError,
    PreconditionViolated,
    SingularMatrix,
)
from psets.exactla import (
    Matrix,
    _rank_int,
    det,
    index_set,
    inverse,
)

__all__ = [
    "VertexClass",
    "Theorem1Verdict",
    "deletion_gap",
    "classify_vertex",
    "classify_all",
    "is_pset",
    "pset_by_pairs",
    "theorem1_conditions",
    "jacobi_check",
    "pvertex_rows_independent",
    "inverse_zero_block",
    "weak_pair_test",
]


class VertexClass(enum.Enum):
    DOWNER = "downer"
    NEUTRAL = "neutral"
    PVERTEX = "P-vertex"

    @classmethod
    def from_gap(cls, gap):
        """Class for the nullity change ``nu(A(i)) - nu(A)``."""
        try:
            return _BY_GAP[gap]
        except KeyError:
            raise InternalInvariantError(
                f"deleting one index changed the nullity by {gap}; interlacing allows only -1, 0, +1"
            ) from None


_BY_GAP = {-1: VertexClass.DOWNER, 0: VertexClass.NEUTRAL, 1: VertexClass.PVERTEX}


def _nullity_keep0(a, keep0):
    """Nullity of the principal submatrix on 0-based indices ``keep0``."""
    ints = a._int
    rows = [[ints[i][j] for j in keep0] for i in keep0]
    return len(keep0) - _rank_int(rows, len(keep0))


def _nullity(a):
    return a.n - _rank_int(a._int, a.n)


def _nullity_without(a, alpha):
    drop = set(alpha)
    return _nullity_keep0(a, [i for i in range(a.n) if i + 1 not in drop])


def deletion_gap(a, alpha):
    """``nu(A(alpha)) - nu(A)``."""
    alpha = index_set(alpha, a.n)
    return _nullity_without(a, alpha) - _nullity(a)


def classify_vertex(a, i):
    if not 1 <= i <= a.n:
        raise IndexOutOfRange(f"index {i} outside 1..{a.n}")
    return VertexClass.from_gap(_nullity_without(a, (i,)) - _nullity(a))


def classify_all(a):
    """Classification of every vertex, in index order."""
    base = _nullity(a)
    return [VertexClass.from_gap(_nullity_without(a, (i,)) - base) for i in range(1, a.n + 1)]


def is_pset(a, alpha):
    """Definitional test; the empty set is a P-set by convention."""
    alpha = index_set(alpha, a.n)
    if not alpha:
        return True
    return _nullity_without(a, alpha) == _nullity(a) + len(alpha)


def pset_by_pairs(a, alpha):
    """True iff every 2-subset of ``alpha`` is a P-set.

    Requires ``|alpha| >= 2``; for smaller sets use :func:`is_pset`.
    """
    alpha = index_set(alpha, a.n)
    if len(alpha) < 2:
        raise CardinalityTooSmall(f"pairwise test needs at least two indices, got {list(alpha)}")
    target = _nullity(a) + 2
    return all(_nullity_without(a, pair) == target for pair in combinations(alpha, 2))


@dataclass(frozen=True)
class Theorem1Verdict:
    """The three equivalent P-set conditions for ``alpha`` moved to the front.

    ``B = A[alpha]``, ``C = A[alpha, complement]``, ``D = A(alpha)``, ``k = |alpha|``.
    """

    alpha: tuple
    k: int
    cond_a: bool
    cond_b: bool
    cond_c: bool
    B: Matrix = field(repr=False)
    C: Matrix = field(repr=False)
    D: Matrix = field(repr=False)

    def __post_init__(self):
        if not self.cond_a == self.cond_b == self.cond_c:
            raise InternalInvariantError(
                f"P-set conditions disagree for {list(self.alpha)}: "
                f"(a)={self.cond_a} (b)={self.cond_b} (c)={self.cond_c}"
            )

    @property
    def holds(self):
        return self.cond_a


def theorem1_conditions(a, alpha):
    """Evaluate the nullity, rank and row-space conditions independently.

    (a) ``nu(D) = nu(A) + k``; (b) ``rank(A) = rank(D) + 2k``; (c) no nonzero
    ``x`` has ``x^T C`` in the row space of ``D``, decided as
    ``rank([C; D]) = k + rank(D)``.
    """
    alpha = index_set(alpha, a.n)
    if not alpha:
        raise CardinalityTooSmall("conditions are stated for a nonempty index set")
    k = len(alpha)
    lead = [i - 1 for i in alpha]
    rest = [i for i in range(a.n) if i + 1 not in alpha]
    b_blk = a._sub(lead, lead)
    c_blk = a._sub(lead, rest)
    d_blk = a._sub(rest, rest)
    stacked = a._sub(lead + rest, rest)

    rank_a = _rank_int(a._int, a.n)
    rank_d = _rank_int(d_blk._int, d_blk.cols)
    cond_a = (d_blk.cols - rank_d) == (a.n - rank_a) + k
    cond_b = rank_a == rank_d + 2 * k
    cond_c = _rank_int(stacked._int, stacked.cols) == k + rank_d
    return Theorem1Verdict(alpha, k, cond_a, cond_b, cond_c, b_blk, c_blk, d_blk)


def jacobi_check(a, alpha, inverse_matrix=None):
    """Check ``det(A[alpha]) == det(inv(A)(alpha)) * det(A)`` exactly.

    ``inverse_matrix`` lets a caller looping over many ``alpha`` reuse one
    inverse; it must be ``inverse(a)``.
    """
    alpha = index_set(alpha, a.n)
    d = det(a)
    if d == 0:
        raise SingularMatrix("Jacobi's identity needs an invertible matrix")
    n_inv = inverse(a) if inverse_matrix is None else inverse_matrix
    keep = [i - 1 for i in alpha]
    rest = [i for i in range(a.n) if i + 1 not in alpha]
    return det(a._principal(keep)) == det(n_inv._principal(rest)) * d


def _require_pvertices(a, alpha):
    base = _nullity(a)
    bad = [i for i in alpha if _nullity_without(a, (i,)) != base + 1]
    if bad:
        raise PreconditionViolated(f"not P-vertices: {bad}")


def pvertex_rows_independent(a, alpha):
    """Whether the rows of ``a`` indexed by a set of P-vertices are independent."""
    alpha = index_set(alpha, a.n)
    _require_pvertices(a, alpha)
    rows = [a._int[i - 1] for i in alpha]
    return _rank_int(rows, a.n) == len(alpha)


def inverse_zero_block(m, alpha):
    """For nonsingular ``m`` whose pairs in ``alpha`` are P-sets, test ``inv(m)[alpha] == 0``."""
    alpha = index_set(alpha, m.n)
    if len(alpha) < 2:
        raise CardinalityTooSmall("the zero-block property concerns sets of at least two indices")
    if det(m) == 0:
        raise SingularMatrix("matrix must be nonsingular")
    target = _nullity(m) + 2
    bad = [p for p in combinations(alpha, 2) if _nullity_without(m, p) != target]
    if bad:
        raise PreconditionViolated(f"pairs that are not P-sets: {[list(p) for p in bad]}")
    n_inv = inverse(m)
    return all(n_inv.entries[i - 1][j - 1] == 0 for i in alpha for j in alpha)


def weak_pair_test(a, i, j):
    """For two P-vertices, report whether deleting both raises the nullity at all.

    The nullity change for a pair of P-vertices is always 0 or 2, so this
    coincides with ``is_pset(a, {i, j})``.
    """
    if i == j:
        raise PreconditionViolated("indices must differ")
    i, j = index_set((i, j), a.n)
    _require_pvertices(a, (i, j))
    gap = _nullity_without(a, (i, j)) - _nullity(a)
    if gap not in (0, 2):
        raise InternalInvariantError(f"pair {{{i}, {j}}} of P-vertices has nullity gap {gap}")
    return gap > 0
