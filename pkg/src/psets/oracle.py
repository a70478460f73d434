"""Brute-force ground truth and theorem-verification campaigns.

Ground truth is computed by a separate Gauss-Jordan routine on Fractions
that builds an explicit nullspace basis. It shares no code with the
fraction-free kernel behind :mod:`psets.exactla`, so each check below
compares the library against an independent route.
"""

import logging
from dataclasses import dataclass, field, replace
from itertools import combinations, product

from psets import core, enumeration
from psets.errors import CapExceeded, PsetError
from psets.exactla import SymMatrix, dependent_on_others, inverse, principal, rank
from psets.matgen import GenSpec, derive_seed, generate
from psets.matrixio import format_matrix

log = logging.getLogger(__name__)

__all__ = [
    "THEOREMS",
    "Witness",
    "VerifyReport",
    "nullspace_basis",
    "oracle_nullity",
    "brute_force_psets",
    "maximal_elements",
    "basis_extension",
    "verify_matrix",
    "fuzz_campaign",
    "campaign_specs",
    "run_campaign",
]

THEOREMS = (
    "jacobi",
    "prop2a",
    "prop2b",
    "theorem3_equivalence",
    "corollary4_lift",
    "theorem5_block",
    "theorem6_equivalence",
    "gap_fact",
    "subset_monotone",
    "enumeration",
)

DEFAULT_CAP = 20
CAMPAIGN_CAP = 12
MAX_WITNESSES = 50


def nullspace_basis(rows, ncols):
    """Basis of ``{x : M x = 0}`` for ``M`` given as rows of Fractions.

    Plain Gauss-Jordan reduction; one basis vector per free column.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            f = m[i][c]
            if i != r and f != 0:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def oracle_nullity(a, deleted=()):
    """Nullity of ``A(deleted)`` from an explicit nullspace basis."""
    drop = set(deleted)
    keep = [i for i in range(a.n) if i + 1 not in drop]
    rows = [[a.entries[i][j] for j in keep] for i in keep]
    return len(nullspace_basis(rows, len(keep)))


def _all_subsets(n):
    for size in range(1, n + 1):
        yield from combinations(range(1, n + 1), size)


def _check_cap(a, cap):
    if a.n > cap:
        raise CapExceeded(f"order {a.n} exceeds the brute-force cap {cap}")


def brute_force_psets(a, cap=DEFAULT_CAP, nullity=None):
    """Every nonempty P-set, ordered by size and then lexicographically.

    ``nullity(a, deleted)`` defaults to :func:`oracle_nullity`.
    """
    _check_cap(a, cap)
    nullity = nullity or oracle_nullity
    base = nullity(a, ())
    return [s for s in _all_subsets(a.n) if nullity(a, s) == base + len(s)]


def maximal_elements(sets):
    """Members not strictly contained in another member, sorted lexicographically."""
    ss = [frozenset(s) for s in sets]
    return sorted(tuple(sorted(s)) for s in ss if not any(s < t for t in ss))


def _oracle_rank(rows, ncols):
    return ncols - len(nullspace_basis(rows, ncols))


def basis_extension(a, alpha):
    """Extend the rows indexed by ``alpha`` to a row-space basis, greedily by index.

    Rows of ``alpha`` are taken first; then each remaining row, in ascending
    order, is added when it increases the rank. Uses the oracle's own
    elimination.
    """
    beta = list(alpha)
    rows = [a.entries[i - 1] for i in beta]
    r = _oracle_rank(rows, a.n)
    for i in range(1, a.n + 1):
        if i in alpha:
            continue
        trial = rows + [a.entries[i - 1]]
        tr = _oracle_rank(trial, a.n)
        if tr > r:
            beta.append(i)
            rows, r = trial, tr
    return tuple(sorted(beta)), r


def _cond_c_direct(a, alpha):
    """Only ``x = 0`` has ``x^T C`` in RS(D), checked via an explicit basis.

    ``x^T C = y^T D`` iff ``(x, -y)`` is in the nullspace of ``[C^T  D^T]``.
    """
    rest = [i for i in range(1, a.n + 1) if i not in alpha]
    cols = list(alpha) + rest
    rows = [[a.entries[r - 1][c - 1] for c in cols] for r in rest]
    k = len(alpha)
    return all(all(x == 0 for x in v[:k]) for v in nullspace_basis(rows, a.n))


@dataclass
class Witness:
    theorem: str
    matrix: SymMatrix
    subset: tuple
    detail: str
    seed: int = None
    index: int = None
    spec: object = None

    @property
    def key(self):
        return (self.seed if self.seed is not None else -1, self.index if self.index is not None else -1)

    def to_text(self):
        comments = [f"witness theorem={self.theorem}", f"subset={','.join(map(str, self.subset))}"]
        if self.seed is not None:
            comments.append(f"seed={self.seed} index={self.index}")
        if self.spec is not None:
            comments.append(f"spec={self.spec}")
        comments.append(f"detail={self.detail}")
        return format_matrix(self.matrix, comments)


@dataclass
class VerifyReport:
    matrices_checked: int = 0
    subsets_checked: int = 0
    passed: dict = field(default_factory=lambda: dict.fromkeys(THEOREMS, 0))
    failed: dict = field(default_factory=lambda: dict.fromkeys(THEOREMS, 0))
    psets_found: int = 0
    nonsingular: int = 0
    first_failure: Witness = None
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not any(self.failed.values())

    @property
    def total_failures(self):
        return sum(self.failed.values())

    def record(self, theorem, ok, witness_fn):
        if ok:
            self.passed[theorem] += 1
            return
        self.failed[theorem] += 1
        w = witness_fn()
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append(w)
        if self.first_failure is None:
            self.first_failure = w

    def merge(self, other):
        out = VerifyReport(
            matrices_checked=self.matrices_checked + other.matrices_checked,
            subsets_checked=self.subsets_checked + other.subsets_checked,
            passed={t: self.passed[t] + other.passed[t] for t in THEOREMS},
            failed={t: self.failed[t] + other.failed[t] for t in THEOREMS},
            psets_found=self.psets_found + other.psets_found,
            nonsingular=self.nonsingular + other.nonsingular,
        )
        ws = sorted(self.failures + other.failures, key=lambda w: w.key)
        out.failures = ws[:MAX_WITNESSES]
        firsts = [w for w in (self.first_failure, other.first_failure) if w is not None]
        out.first_failure = min(firsts, key=lambda w: w.key) if firsts else None
        return out

    def as_dict(self):
        d = {
            "matrices_checked": self.matrices_checked,
            "subsets_checked": self.subsets_checked,
            "psets_found": self.psets_found,
            "nonsingular": self.nonsingular,
            "passed": dict(self.passed),
            "failed": dict(self.failed),
            "ok": self.ok,
        }
        w = self.first_failure
        d["first_failure"] = None if w is None else {
            "theorem": w.theorem,
            "subset": list(w.subset),
            "seed": w.seed,
            "index": w.index,
            "detail": w.detail,
            "matrix": [[str(x) for x in row] for row in w.matrix.entries],
        }
        return d


class _Checker:
    def __init__(self, a, report, seed, index, spec):
        self.a, self.report = a, report
        self.origin = dict(seed=seed, index=index, spec=spec)

    def __call__(self, theorem, subset, fn):
        """Run ``fn() -> (ok, detail)``; a library exception counts as a failure."""
        try:
            ok, detail = fn()
        except PsetError as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.report.record(
            theorem, ok, lambda: Witness(theorem, self.a, tuple(subset), detail, **self.origin)
        )


def verify_matrix(a, cap=CAMPAIGN_CAP, *, seed=None, index=None, spec=None):
    """Check every implemented statement on ``a`` against brute-force truth."""
    _check_cap(a, cap)
    n = a.n
    rep = VerifyReport(matrices_checked=1)
    check = _Checker(a, rep, seed, index, spec)

    subsets = list(_all_subsets(n))
    rep.subsets_checked = len(subsets)
    null = {(): oracle_nullity(a)}
    for s in subsets:
        null[s] = oracle_nullity(a, s)
    nu = null[()]
    truth = {s: null[s] == nu + len(s) for s in subsets}
    truth[()] = True
    true_psets = [s for s in subsets if truth[s]]
    rep.psets_found = len(true_psets)
    pverts = tuple(i for i in range(1, n + 1) if truth[(i,)])
    nonsingular = nu == 0
    rep.nonsingular = int(nonsingular)

    # pairs suffice; the definitional and pairwise tests agree with truth
    for s in subsets:
        if len(s) >= 2:
            check("theorem6_equivalence", s, lambda s=s: (
                core.pset_by_pairs(a, s) == core.is_pset(a, s) == truth[s],
                f"truth={truth[s]}",
            ))
        check("theorem6_equivalence", s, lambda s=s: (
            enumeration.is_pset_fast(a, s) == truth[s], f"is_pset_fast vs truth={truth[s]}"
        ))

    def cliques_match():
        g = enumeration.pair_graph(a)
        gw = enumeration.pair_graph(a, use_weak_test=True)
        cliques = [s for s in subsets if set(s) <= set(g.vertices) and g.is_clique(s)]
        return cliques == true_psets and g == gw, f"cliques={cliques} truth={true_psets}"

    check("theorem6_equivalence", (), cliques_match)

    for s in subsets:
        def t3(s=s):
            v = core.theorem1_conditions(a, s)
            direct = _cond_c_direct(a, s)
            return v.cond_a == direct == truth[s], f"verdict={v} direct_c={direct} truth={truth[s]}"
        check("theorem3_equivalence", s, t3)

    for i in range(1, n + 1):
        def p2a(i=i):
            gap = null[(i,)] - nu
            downer = core.classify_vertex(a, i) is core.VertexClass.DOWNER
            dep = dependent_on_others(a, i)
            others = a._sub([k for k in range(n) if k != i - 1], range(n))
            restated = rank(others) == rank(a)
            return (
                downer == dep == restated == (gap == -1) and abs(gap) <= 1,
                f"downer={downer} dependent={dep} restated={restated} true_gap={gap}",
            )
        check("prop2a", (i,), p2a)

    for size in range(1, len(pverts) + 1):
        for s in combinations(pverts, size):
            check("prop2b", s, lambda s=s: (core.pvertex_rows_independent(a, s), "rows dependent"))

    for i, j in combinations(pverts, 2):
        def gap(i=i, j=j):
            lib_gap = core.deletion_gap(a, (i, j))
            true_gap = null[(i, j)] - nu
            weak = core.weak_pair_test(a, i, j)
            return (
                lib_gap == true_gap and true_gap in (0, 2) and weak == core.is_pset(a, (i, j)) == truth[(i, j)],
                f"library_gap={lib_gap} true_gap={true_gap} weak={weak}",
            )
        check("gap_fact", (i, j), gap)

    if nonsingular:
        def jac(s, inv):
            return core.jacobi_check(a, s, inverse_matrix=inv), "det(A[s]) != det(inv(A)(s)) det(A)"
        try:
            inv = inverse(a)
        except PsetError as exc:
            check("jacobi", (), lambda: (False, f"{type(exc).__name__}: {exc}"))
        else:
            for s in [()] + subsets:
                check("jacobi", s, lambda s=s: jac(s, inv))

        for s in subsets:
            if len(s) >= 2 and all(truth[p] for p in combinations(s, 2)):
                check("theorem5_block", s, lambda s=s: (core.inverse_zero_block(a, s), "inverse block nonzero"))

    for size in range(1, len(pverts) + 1):
        for s in combinations(pverts, size):
            def lift(s=s):
                beta, r = basis_extension(a, s)
                if r != n - nu or len(beta) != r or oracle_nullity(a, [i for i in range(1, n + 1) if i not in beta]) != 0:
                    return False, f"basis extension beta={beta} rank={r} is not a nonsingular basis block"
                pos = tuple(beta.index(i) + 1 for i in s)
                lhs = core.is_pset(principal(a, beta), pos)
                rhs = core.is_pset(a, s)
                return (not lhs or rhs) and rhs == truth[s], f"beta={beta} in_block={lhs} in_A={rhs} truth={truth[s]}"
            check("corollary4_lift", s, lift)

    for s in true_psets:
        if len(s) >= 2:
            for drop in s:
                sub = tuple(x for x in s if x != drop)
                check("subset_monotone", sub, lambda sub=sub: (
                    truth[sub] and core.is_pset(a, sub), f"subset of P-set {s} rejected"
                ))

    def enum():
        got = enumeration.maximal_psets(a)
        want = maximal_elements(true_psets)
        return got == want, f"maximal_psets={got} brute_force={want}"

    check("enumeration", (), enum)
    return rep


def fuzz_campaign(specs, count, cap=CAMPAIGN_CAP):
    """Generate ``count`` matrices per spec and verify each one.

    Matrix ``k`` of a spec uses ``derive_seed(spec.seed, k)``.
    """
    report = VerifyReport()
    for spec in specs:
        if spec.n > cap:
            raise CapExceeded(f"spec order {spec.n} exceeds the brute-force cap {cap}")
        for k in range(count):
            mseed = derive_seed(spec.seed, k)
            a = generate(replace(spec, seed=mseed))
            rep = verify_matrix(a, cap, seed=spec.seed, index=k, spec=replace(spec, seed=mseed))
            report = report.merge(rep)
        log.debug("spec %s: %d matrices", spec, count)
    return report


def campaign_specs(families, orders, densities, diagonals, bound, seed):
    """One spec per combination, each with its own derived base seed."""
    specs = []
    for fam, n, diag in product(families, orders, diagonals):
        for dens in densities if fam == "dense" else densities[:1]:
            specs.append(GenSpec(n=n, family=fam, entry_bound=bound, density=dens,
                                 diagonal_mode=diag, seed=derive_seed(seed, len(specs))))
    return specs


def run_campaign(specs, count, cap=CAMPAIGN_CAP):
    """Spread ``count`` matrices over ``specs`` as evenly as possible."""
    report = VerifyReport()
    if not specs:
        return report
    base, extra = divmod(count, len(specs))
    for k, spec in enumerate(specs):
        c = base + (k < extra)
        if c:
            report = report.merge(fuzz_campaign([spec], c, cap=cap))
    return report
