"""P-set enumeration through the pair graph.

A set of two or more indices is a P-set exactly when each of its pairs is,
so the P-sets of size >= 2 are the cliques of the graph whose vertices are
the P-vertices and whose edges are the 2-element P-sets. Maximal P-sets are
then maximal cliques, with isolated P-vertices as singleton cliques.
"""

from dataclasses import dataclass
from itertools import combinations

from psets.core import VertexClass, _nullity, _nullity_without, classify_all, weak_pair_test
from psets.exactla import index_set

__all__ = [
    "PairGraph",
    "p_vertices",
    "pair_graph",
    "maximal_cliques",
    "maximal_psets",
    "is_pset_fast",
]


@dataclass(frozen=True)
class PairGraph:
    vertices: tuple
    edges: frozenset  # of (i, j) with i < j

    def __post_init__(self):
        vs = set(self.vertices)
        for i, j in self.edges:
            if i >= j or i not in vs or j not in vs:
                raise ValueError(f"bad edge {(i, j)} for vertices {self.vertices}")

    def neighbors(self):
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def sorted_edges(self):
        return sorted(self.edges)

    def is_clique(self, members):
        return all((i, j) in self.edges for i, j in combinations(sorted(members), 2))


def p_vertices(a):
    return tuple(i for i, c in enumerate(classify_all(a), start=1) if c is VertexClass.PVERTEX)


def pair_graph(a, use_weak_test=False):
    """Pair graph of ``a``.

    With ``use_weak_test`` each edge is decided by the weak test (nullity
    increases at all) instead of the exact ``+2`` condition; both give the
    same graph.
    """
    verts = p_vertices(a)
    if use_weak_test:
        edges = frozenset(p for p in combinations(verts, 2) if weak_pair_test(a, *p))
    else:
        target = _nullity(a) + 2
        edges = frozenset(p for p in combinations(verts, 2) if _nullity_without(a, p) == target)
    return PairGraph(verts, edges)


def _bron_kerbosch(r, p, x, adj, out):
    if not p and not x:
        out.append(tuple(sorted(r)))
        return
    # pivot maximizes |P & N(u)|; ties go to the smallest index
    pivot = min(p | x, key=lambda u: (-len(p & adj[u]), u))
    for v in sorted(p - adj[pivot]):
        _bron_kerbosch(r | {v}, p & adj[v], x & adj[v], adj, out)
        p = p - {v}
        x = x | {v}


def maximal_cliques(g):
    """All maximal cliques of ``g`` as ascending tuples, sorted lexicographically."""
    out = []
    if not g.vertices:
        return out
    _bron_kerbosch(set(), set(g.vertices), set(), g.neighbors(), out)
    return sorted(out)


def maximal_psets(a):
    return maximal_cliques(pair_graph(a))


def is_pset_fast(a, alpha):
    alpha = index_set(alpha, a.n)
    if not alpha:
        return True
    verts = set(p_vertices(a))
    if not verts.issuperset(alpha):
        return False
    if len(alpha) == 1:
        return True
    target = _nullity(a) + 2
    return all(_nullity_without(a, p) == target for p in combinations(alpha, 2))
