"""Time each hot kernel compiled with numba against its plain numpy/Python body.

    python benchmarks/bench_kernels.py [--repeat 3]

The pure path is each kernel's ``py_func``, the same code that runs when
SPECBOUNDS_DISABLE_NUMBA=1 is set.  Compilation is done before timing.
"""
import argparse
import time

import numpy as np

from specbounds import _accel, families, kernels
from specbounds.graph import cartesian_product


def cases():
    h3 = families.join_family(3)
    grid = families.grid(4, 4)
    prod = cartesian_product(families.cycle(4), families.complete_bipartite(2, 3))
    pet = families.petersen()
    return [
        ("jacobi_eigh grid4x4", kernels.jacobi_eigh, lambda: (grid.adjacency_matrix().astype(float), 1e-12, 100)),
        ("jacobi_eigh random 48", kernels.jacobi_eigh, lambda: (_random_sym(48), 1e-12, 100)),
        ("bipartite_search H_3", kernels.bipartite_search, lambda: (h3.masks, h3.n)),
        ("bipartite_search C4xK2,3", kernels.bipartite_search, lambda: (prod.masks, prod.n)),
        ("densest_subset grid4x4", kernels.densest_subset, lambda: (grid.masks, grid.n)),
        ("max_independent_set C4xK2,3", kernels.max_independent_set, lambda: (prod.masks, prod.n, 0)),
        ("k_coloring petersen k=3", kernels.k_coloring, lambda: (pet.masks, pet.n, 3)),
    ]


def _random_sym(n):
    a = np.random.default_rng(0).normal(size=(n, n))
    return a + a.T


def best_of(fn, make_args, repeat):
    times = []
    for _ in range(repeat):
        args = make_args()
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if not _accel.USE_NUMBA:
        print("numba disabled; both columns run the pure path")
    print(f"{'kernel':32s} {'numba s':>10s} {'pure s':>10s} {'speedup':>8s}")
    for name, fn, make_args in cases():
        fn(*make_args())  # compile
        fast = best_of(fn, make_args, args.repeat)
        slow = best_of(fn.py_func, make_args, args.repeat)
        print(f"{name:32s} {fast:10.4f} {slow:10.4f} {slow / fast:8.1f}x")


if __name__ == "__main__":
    main()
