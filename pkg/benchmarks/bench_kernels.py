"""Compare the jitted kernels against the numpy fallbacks on real inputs.

Each kernel runs on adjacency matrices taken from actual group graphs (plus
one random graph as a stress case), once per backend, best of --repeat runs.
Results are checked for equality before any timing is reported, so a speedup
claim can never hide a divergence.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5
"""

import argparse
import time

import numpy as np

from noncyc import build_bundle, kernels
from noncyc._backend import numba_available


def group_graphs():
    cases = [
        ("S4 graph", "Symmetric(4)"),
        ("SL2(3)xC4 graph", "DirectProduct(SL2(3),Cyclic(4))"),
        ("A5 graph", "Alternating(5)"),
        ("S5 graph", "Symmetric(5)"),
        ("PSL2(8) graph", "PSL2(8)"),
    ]
    out = []
    for label, spec in cases:
        adj = build_bundle(spec).noncyclic.adj
        out.append((f"{label} ({adj.shape[0]}v)", adj))
    rng = np.random.default_rng(7)
    m = 90
    rand = rng.random((m, m)) < 0.25
    rand = np.triu(rand, 1)
    out.append((f"random ({m}v)", rand | rand.T))
    return out


def table_cases():
    from noncyc.construct import build_group

    out = []
    for spec in ("Symmetric(4)", "Alternating(5)", "PSL2(7)"):
        g = build_group(spec)
        out.append((f"{spec} table ({g.order})", g.table))
    return out


KERNELS = {
    "all_pairs_dist": lambda adj: kernels.all_pairs_dist(adj),
    "max_clique": lambda adj: kernels.max_clique(adj),
    "ham_backtrack": lambda adj: kernels.ham_backtrack(adj),
    "domination(3)": lambda adj: kernels.domination_bounded(adj, 3),
}


def best_of(fn, arg, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(arg)
        best = min(best, time.perf_counter() - start)
    return best, result


def equalish(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def run(repeat: int) -> None:
    if not numba_available():
        raise SystemExit("numba is not importable; nothing to compare against")
    kernels.set_backend("numba")
    kernels.warmup()
    rows = []
    for kname, fn in KERNELS.items():
        for label, adj in group_graphs():
            timings = {}
            results = {}
            for backend in ("numba", "numpy"):
                kernels.set_backend(backend)
                timings[backend], results[backend] = best_of(fn, adj, repeat)
            if not equalish(results["numba"], results["numpy"]):
                raise SystemExit(f"backend mismatch: {kname} on {label}")
            rows.append((kname, label, timings["numba"], timings["numpy"]))
    for label, table in table_cases():
        timings = {}
        for backend in ("numba", "numpy"):
            kernels.set_backend(backend)
            timings[backend], _ = best_of(
                kernels.associativity_violation, table, repeat
            )
        rows.append(("associativity", label, timings["numba"], timings["numpy"]))
    kernels.set_backend("auto")

    width = max(len(r[1]) for r in rows)
    print(f"{'kernel':<18} {'input':<{width}} {'numba':>10} {'numpy':>10} {'ratio':>8}")
    for kname, label, tn, tp in rows:
        ratio = tp / tn if tn > 0 else float("inf")
        print(
            f"{kname:<18} {label:<{width}} {tn * 1e3:>8.2f}ms {tp * 1e3:>8.2f}ms "
            f"{ratio:>7.1f}x"
        )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeat", type=int, default=3, help="runs per cell, best one counts"
    )
    args = parser.parse_args()
    run(args.repeat)


if __name__ == "__main__":
    main()
