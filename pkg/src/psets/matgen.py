"""Test-matrix generators and the graph of a matrix.

Randomness comes from SplitMix64 so that a seed gives the same matrix on
every platform and in every language that reimplements the recurrence::

    state = (state + 0x9E3779B97F4A7C15) mod 2**64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    output z ^ (z >> 31)

Bounded integers in ``[0, m)`` use rejection: outputs at or above
``2**64 - (2**64 mod m)`` are discarded, the rest are reduced mod ``m``.

Draw order is part of the contract. Trees draw the Pruefer sequence, then
one weight per edge in ascending edge order. Dense matrices visit pairs
``i < j`` row by row, drawing presence and then, if present, the weight.
Random diagonals are drawn last, ``a_11`` first.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction

from psets.errors import InvalidSpec
from psets.exactla import SymMatrix, to_rational

__all__ = ["SplitMix64", "GenSpec", "FAMILIES", "derive_seed", "generate", "graph_of", "prufer_decode"]

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

FAMILIES = ("path", "star", "tree", "dense", "zero", "identity")
DIAGONAL_MODES = ("zero", "random")


def _mix(z):
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next(self):
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def below(self, m):
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next()
            if x < limit:
                return x % m

    def nonzero_rational(self, bound):
        num = self.below(2 * bound) - bound
        if num >= 0:
            num += 1
        return Fraction(num, 1 + self.below(bound))

    def rational(self, bound):
        num = self.below(2 * bound + 1) - bound
        return Fraction(num, 1 + self.below(bound))


def derive_seed(base, k):
    """Seed for the ``k``-th matrix of a campaign seeded with ``base``."""
    return _mix((base + (k + 1) * GOLDEN) & MASK64)


@dataclass(frozen=True)
class GenSpec:
    """Parameters for :func:`generate`.

    ``diagonal_mode`` applies to the path, star, tree and dense families;
    ``zero`` and ``identity`` ignore it. ``density`` is used by ``dense`` only.
    """

    n: int
    family: str = "dense"
    entry_bound: int = 3
    density: Fraction = Fraction(1, 2)
    diagonal_mode: str = "zero"
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InvalidSpec(f"order must be a nonnegative integer, got {self.n!r}")
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if not isinstance(self.entry_bound, int) or self.entry_bound < 1:
            raise InvalidSpec(f"entry bound must be a positive integer, got {self.entry_bound!r}")
        try:
            density = to_rational(self.density)
        except (TypeError, ValueError) as exc:
            raise InvalidSpec(f"bad density {self.density!r}") from exc
        if not 0 <= density <= 1:
            raise InvalidSpec(f"density {density} outside [0, 1]")
        object.__setattr__(self, "density", density)
        if self.diagonal_mode not in DIAGONAL_MODES:
            raise InvalidSpec(f"diagonal mode must be 'zero' or 'random', got {self.diagonal_mode!r}")
        if not isinstance(self.seed, int):
            raise InvalidSpec("seed must be an integer")
        object.__setattr__(self, "seed", self.seed & MASK64)


def prufer_decode(seq, n):
    """Edges (1-based, ``i < j``, sorted) of the labeled tree with Pruefer sequence ``seq``."""
    if n < 2:
        return []
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, w), max(u, w)))
    return sorted(edges)


def generate(spec):
    n = spec.n
    rng = SplitMix64(spec.seed)
    a = [[Fraction(0)] * n for _ in range(n)]

    def put(i, j, w):
        a[i - 1][j - 1] = a[j - 1][i - 1] = w

    fam = spec.family
    if fam == "identity":
        for i in range(n):
            a[i][i] = Fraction(1)
        return SymMatrix(a)
    if fam == "zero":
        return SymMatrix(a)
    if fam == "path":
        for i in range(1, n):
            put(i, i + 1, Fraction(1))
    elif fam == "star":
        for j in range(2, n + 1):
            put(1, j, Fraction(1))
    elif fam == "tree":
        seq = [1 + rng.below(n) for _ in range(max(n - 2, 0))]
        for i, j in prufer_decode(seq, n):
            put(i, j, rng.nonzero_rational(spec.entry_bound))
    elif fam == "dense":
        num, den = spec.density.numerator, spec.density.denominator
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if rng.below(den) < num:
                    put(i, j, rng.nonzero_rational(spec.entry_bound))
    if spec.diagonal_mode == "random":
        for i in range(n):
            a[i][i] = rng.rational(spec.entry_bound)
    return SymMatrix(a)


def graph_of(a):
    """Edges ``(i, j)``, ``i < j``, with a nonzero off-diagonal entry."""
    e = a.entries
    return [(i + 1, j + 1) for i in range(a.rows) for j in range(i + 1, a.rows) if e[i][j]]
