"""Compare the compiled kernels with the numpy fallback.

Run as: python3 benchmarks/bench_kernels.py
"""

import time

from ringlab import core
from ringlab._kernels import _pure

try:
    from ringlab._kernels import _native
except ImportError:
    _native = None


def best_of(fn, repeat=5):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    z256 = core.make_zmod(256)
    f256 = core.make_gf(2, 8)
    z1024 = core.make_zmod(1024)
    members = list(range(z256.order))
    return [
        ("axiom scan zmod(256)",
         lambda k: k.ring_axiom_violation(z256.add, z256.mul,
                                          z256.zero, z256.one)),
        ("axiom scan gf(2,8)",
         lambda k: k.ring_axiom_violation(f256.add, f256.mul,
                                          f256.zero, f256.one)),
        ("abelian scan zmod(1024)",
         lambda k: k.abelian_group_violation(z1024.add, z1024.zero)),
        ("subring closure gf(2,8)",
         lambda k: k.close_subring(f256.add, f256.mul, f256.neg,
                                   [f256.zero, f256.one, 2])),
        ("ideal closure zmod(256)",
         lambda k: k.close_ideal(z256.add, z256.neg, z256.mul,
                                 members, [32])),
    ]


def main():
    if _native is None:
        print("compiled backend not built; nothing to compare")
        return
    rows = []
    for name, work in workloads():
        t_pure = best_of(lambda: work(_pure))
        t_native = best_of(lambda: work(_native))
        rows.append((name, t_pure, t_native))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'native':>9}  {'speedup':>8}")
    for name, t_pure, t_native in rows:
        ratio = t_pure / t_native if t_native > 0 else float("inf")
        print(f"{name:<{width}}  {t_pure * 1e3:8.2f}ms  "
              f"{t_native * 1e3:8.2f}ms  {ratio:7.1f}x")


if __name__ == "__main__":
    main()
