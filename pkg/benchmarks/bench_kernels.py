"""Time the pure-Python kernels against the compiled ones.

    python benchmarks/bench_kernels.py [--n-max 200] [--repeat 3]
"""

import argparse
import timeit

from quasicount import _pykernels
from quasicount.oracle import units
from quasicount.signatures import enumerate_signatures

try:
    from quasicount import _ckernels
except ImportError:
    _ckernels = None


def workloads(n_max):
    sig_jobs = [(n, tuple(s), units(n)) for n in range(2, n_max + 1)
                for s in enumerate_signatures(n)]
    odd = range(1, 20 * n_max, 2)
    return {
        "triple_orbits": lambda k: [k.triple_orbits(n, s, u) for n, s, u in sig_jobs],
        "pair_orbit_count": lambda k: [k.pair_orbit_count(n, units(n)) for n in range(1, n_max + 1)],
        "count_tau2": lambda k: [k.count_tau2(n) for n in odd],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": _pykernels}
    if _ckernels is None:
        print("compiled kernels not built; timing the Python fallback only")
    else:
        backends["cython"] = _ckernels
    print(f"{'kernel':<18}" + "".join(f"{b:>10}" for b in backends) + ("   speedup" if _ckernels else ""))
    for name, job in workloads(args.n_max).items():
        times = {b: min(timeit.repeat(lambda: job(k), number=1, repeat=args.repeat))
                 for b, k in backends.items()}
        row = f"{name:<18}" + "".join(f"{t:>9.3f}s" for t in times.values())
        if _ckernels:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
