"""Compare the numba-compiled BFS kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--nodes N] [--pairs P]

Builds a random single-rooted DAG, samples node pairs, and times
shortest-path queries under both backends. Run with TAXSIM_NO_NUMBA=1 to
confirm the package works end to end on the fallback alone.
"""

import argparse
import random
import time

import numpy as np

from taxsim import kernels
from taxsim.taxonomy import Synset, build_taxonomy


def make_dag(rng, n, max_parents=2):
    synsets = [Synset(id="n0", lemmas=("n0",))]
    for i in range(1, n):
        k = rng.randint(1, min(max_parents, i))
        parents = tuple(f"n{p}" for p in rng.sample(range(i), k))
        synsets.append(Synset(id=f"n{i}", lemmas=(f"n{i}",), hypernyms=parents))
    return build_taxonomy(synsets)


def time_backend(fn, indptr, indices, srcs, dsts, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(indptr, indices, srcs, dsts)
        best = min(best, time.perf_counter() - start)
    return best, result


def numpy_many(indptr, indices, srcs, dsts):
    out = np.empty(len(srcs), dtype=np.int64)
    for i in range(len(srcs)):
        out[i] = kernels._bfs_distance_py(indptr, indices, int(srcs[i]), int(dsts[i]))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=20_000)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"building random DAG with {args.nodes} nodes ...")
    t = make_dag(rng, args.nodes)
    indptr, indices = t._und_indptr, t._und_indices
    srcs = np.array([rng.randrange(args.nodes) for _ in range(args.pairs)], dtype=np.int64)
    dsts = np.array([rng.randrange(args.nodes) for _ in range(args.pairs)], dtype=np.int64)

    np_time, np_result = time_backend(numpy_many, indptr, indices, srcs, dsts)
    print(f"numpy fallback : {args.pairs} BFS queries in {np_time:.3f}s "
          f"({1e3 * np_time / args.pairs:.2f} ms/query)")

    if kernels.HAS_NUMBA and kernels.USE_NUMBA:
        kernels.bfs_distance_many(indptr, indices, srcs[:1], dsts[:1])  # JIT warmup
        nb_time, nb_result = time_backend(
            kernels.bfs_distance_many, indptr, indices, srcs, dsts)
        assert np.array_equal(np_result, nb_result), "backends disagree"
        print(f"numba kernels  : {args.pairs} BFS queries in {nb_time:.3f}s "
              f"({1e3 * nb_time / args.pairs:.2f} ms/query)")
        print(f"speedup        : {np_time / nb_time:.1f}x")
    else:
        print("numba backend inactive (not installed or TAXSIM_NO_NUMBA set)")


if __name__ == "__main__":
    main()
