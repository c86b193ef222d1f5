"""Benchmark the numba kernels against the pure-numpy fallbacks.

Usage:  python benchmarks/bench_kernels.py [--policies 512] [--rounds 20000]

Forces a numba warm-up before timing; prints one line per (kernel, backend).
The active backend for library code is chosen by NONSTAT_BANDIT_BACKEND.
"""

import argparse
import time

import numpy as np

from nonstat_bandits import _kernels


def time_fn(fn, *args, repeats=5):
    fn(*args)  # warm-up (JIT compile for the numba path)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--policies", type=int, default=512)
    parser.add_argument("--contexts", type=int, default=16)
    parser.add_argument("--actions", type=int, default=4)
    parser.add_argument("--rounds", type=int, default=20_000)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    tables = rng.integers(0, args.actions, size=(args.policies, args.contexts))
    ctxs = rng.integers(0, args.contexts, size=args.rounds)
    rewards = rng.random((args.rounds, args.actions))
    acts = rng.integers(0, args.actions, size=args.rounds)
    ws = rng.random(args.rounds)

    print(f"active backend: {_kernels.backend_name()}")
    print(f"N={args.policies} |X|={args.contexts} K={args.actions} rounds={args.rounds}\n")

    rows = [("dataset_scores", _kernels.dataset_scores, _kernels.dataset_scores_numpy,
             (tables, ctxs, rewards))]
    for name, active, fallback, a in rows:
        t_active = time_fn(active, *a)
        t_numpy = time_fn(fallback, *a)
        print(f"{name:18s} active: {t_active * 1e3:8.2f} ms   numpy: {t_numpy * 1e3:8.2f} ms   speedup x{t_numpy / t_active:.1f}")

    prefix_a = np.zeros((args.policies, args.rounds + 1))
    prefix_b = np.zeros((args.policies, args.rounds + 1))
    t_active = time_fn(lambda: _kernels.extend_iw_prefix(prefix_a, tables, ctxs, acts, ws, 0))
    t_numpy = time_fn(lambda: _kernels.extend_iw_prefix_numpy(prefix_b, tables, ctxs, acts, ws, 0))
    assert np.allclose(prefix_a, prefix_b)
    print(f"{'extend_iw_prefix':18s} active: {t_active * 1e3:8.2f} ms   numpy: {t_numpy * 1e3:8.2f} ms   speedup x{t_numpy / t_active:.1f}")


if __name__ == "__main__":
    main()
