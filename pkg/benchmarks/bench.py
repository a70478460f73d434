"""Compiled vs pure-Python kernel, and clique enumeration vs brute force.

Usage: python benchmarks/bench.py [--quick] [--output benchmarks/REPORT.md]
"""

import argparse
import os
import platform
import subprocess
import sys
import time
from pathlib import Path

from psets import _backend, _pykernels
from psets.enumeration import maximal_psets
from psets.exactla import nullity, submatrix_delete
from psets.matgen import GenSpec, SplitMix64, derive_seed, generate
from psets.oracle import brute_force_psets, maximal_elements


def random_int_matrix(rng, n, bound):
    return [[rng.below(2 * bound + 1) - bound for _ in range(n)] for _ in range(n)]


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, time.perf_counter() - t0)
    return best / repeat


def bench_kernels(quick):
    rng = SplitMix64(1)
    rows = []
    for n, bound in [(6, 3), (8, 3), (12, 3), (16, 2), (24, 9)]:
        mats = [random_int_matrix(rng, n, bound) for _ in range(20)]
        reps = 5 if quick else 50
        t_py = timeit(lambda: [_pykernels.eliminate(m, n) for m in mats], reps) / len(mats)
        if _backend.eliminate_native is not None:
            t_c = timeit(lambda: [_backend.eliminate_native(m, n) for m in mats], reps) / len(mats)
        else:
            t_c = float("nan")
        rows.append((n, bound, t_py, t_c))
    return rows


def bench_enumeration(quick):
    trees = [generate(GenSpec(n=12, family="tree", diagonal_mode=mode, seed=derive_seed(2024, k)))
             for k in range(2 if quick else 8) for mode in ("zero", "random")]
    lib = lambda a, s: nullity(submatrix_delete(a, s))  # noqa: E731
    t0 = time.perf_counter()
    fast = [maximal_psets(a) for a in trees]
    t_fast = time.perf_counter() - t0
    t0 = time.perf_counter()
    brute = [brute_force_psets(a, nullity=lib) for a in trees]
    t_brute = time.perf_counter() - t0
    t0 = time.perf_counter()
    oracle = [brute_force_psets(a) for a in trees[:4]]
    t_oracle = (time.perf_counter() - t0) * len(trees) / 4
    assert fast == [maximal_elements(b) for b in brute]
    assert fast[:4] == [maximal_elements(b) for b in oracle]
    return len(trees), t_fast, t_brute, t_oracle


def bench_campaign(pure):
    env = dict(os.environ, PSETS_PURE_PYTHON="1" if pure else "0")
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-m", "psets", "fuzz", "--family", "tree", "--n", "2..7",
                    "--count", "500", "--seed", "42"], env=env, check=True, capture_output=True)
    return time.perf_counter() - t0


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--quick", action="store_true")
    p.add_argument("--output", default=str(Path(__file__).with_name("REPORT.md")))
    args = p.parse_args()

    kernels = bench_kernels(args.quick)
    count, t_fast, t_brute, t_oracle = bench_enumeration(args.quick)
    camp_c = bench_campaign(pure=False) if _backend.eliminate_native is not None else float("nan")
    camp_py = bench_campaign(pure=True)

    lines = [
        "# Benchmark report",
        "",
        f"Python {platform.python_version()} on {platform.machine()}; active backend: `{_backend.BACKEND}`.",
        "",
        "## Fraction-free elimination kernel (per matrix)",
        "",
        "| order | entry bound | pure Python | compiled | speedup |",
        "|---:|---:|---:|---:|---:|",
    ]
    for n, bound, t_py, t_c in kernels:
        lines.append(f"| {n} | {bound} | {t_py * 1e6:.1f} us | {t_c * 1e6:.1f} us | {t_py / t_c:.1f}x |")
    lines += [
        "",
        "Order 24 with bound 9 overflows int64 partway through, so the compiled kernel",
        "falls back to arbitrary-precision integers and runs at pure-Python speed.",
        "",
        "## Maximal P-sets on weighted trees of order 12",
        "",
        f"{count} trees (zero and random diagonals).",
        "",
        "| method | total time |",
        "|---|---:|",
        f"| pair graph + Bron-Kerbosch | {t_fast:.4f} s |",
        f"| brute force over 4095 subsets, same kernel | {t_brute:.3f} s |",
        f"| brute force, independent Fraction oracle (extrapolated) | {t_oracle:.3f} s |",
        "",
        f"Speedup of clique enumeration over brute force with the same kernel: **{t_brute / t_fast:.0f}x**.",
        "",
        "## Full verification campaign (500 trees, orders 2..7)",
        "",
        "| backend | wall time |",
        "|---|---:|",
        f"| compiled | {camp_c:.2f} s |",
        f"| pure Python | {camp_py:.2f} s |",
        "",
        "The campaign is dominated by the brute-force oracle, which deliberately avoids the",
        "compiled kernel, so its speedup is smaller than the raw kernel speedup.",
        "",
    ]
    text = "\n".join(lines)
    Path(args.output).write_text(text)
    print(text)


if __name__ == "__main__":
    main()
