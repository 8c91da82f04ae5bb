"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import time

from hyperdom import _pykernels
from hyperdom.constructions import projective_design
from hyperdom.domination import DominationVariant, cover_problem
from hyperdom.extremal import _refine
from hyperdom.rng import SplitMix64, random_uniform_hypergraph

try:
    from hyperdom import _kernels
except ImportError:
    _kernels = None


def sweep_workload():
    # no 3-set 2-dominates H_{3,3,3}: the whole C(52, 3) sweep runs
    h, _ = projective_design(3, 3, 3)
    coverers, demand, waive = cover_problem(h, DominationVariant.s_dominating(2))
    return "certify H(3,3,3) s=2, all 3-sets", lambda k: k.first_satisfying(
        coverers, demand, waive, h.n, 3, 10**9)


def plain_workload():
    h, _ = projective_design(3, 3, 3)
    coverers, demand, waive = cover_problem(h, DominationVariant.plain())
    return "certify H(3,3,3) plain, all 2-sets", lambda k: k.first_satisfying(
        coverers, demand, waive, h.n, 2, 10**9)


def canonical_workload():
    rng = SplitMix64(1)
    graphs = [random_uniform_hypergraph(rng, 8, 3, 6) for _ in range(40)]
    prepared = [(h.masks, h.n, _refine(h.masks, h.n)) for h in graphs]

    def run(k):
        for masks, n, cells in prepared:
            k.canonical_form(masks, n, cells)
    return "canonical form, 40 random 3-graphs on 8 vertices", run


def timed(fn, kernels, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; only the pure-Python timings are shown")
    print(f"{'workload':<52} {'python/s':>9} {'cython/s':>9} {'speedup':>8}")
    for make in (plain_workload, sweep_workload, canonical_workload):
        name, fn = make()
        py = timed(fn, _pykernels, args.repeat)
        if _kernels is None:
            print(f"{name:<52} {py:9.4f} {'-':>9} {'-':>8}")
            continue
        assert fn(_pykernels) == fn(_kernels)
        cy = timed(fn, _kernels, args.repeat)
        print(f"{name:<52} {py:9.4f} {cy:9.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
