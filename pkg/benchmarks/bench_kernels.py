"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n 7]

Times each hot kernel over the full reachable state space of size ``n``,
plus an FPT solve of the tight family.
"""

import argparse
import importlib
import sys
import timeit


def load(name):
    try:
        return importlib.import_module(f"pdcj.{name}")
    except ImportError:
        return None


def states(kernels, n):
    from pdcj.genome import identity_unsigned

    start = identity_unsigned(n).flat
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for s in frontier:
            for w, _, _ in kernels.unsigned_children(s, n):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return sorted(seen)


def workloads(kernels, n, pool):
    def expand():
        for s in pool:
            kernels.unsigned_children(s, n)

    def expand_restricted():
        for s in pool:
            kernels.unsigned_children(s, n, True)

    def breakpoints():
        for s in pool:
            kernels.breakpoint_count(s)

    def bound():
        for s in pool:
            kernels.unsigned_lb(s, n)

    return {
        "children": expand,
        "children-restricted": expand_restricted,
        "breakpoints": breakpoints,
        "cycle-bound": bound,
    }


def fpt_time(kernels, p, repeat):
    from pdcj import solvers
    from pdcj.generators import gen_tight_family

    g = gen_tight_family(p)
    saved = solvers.kernels
    solvers.kernels = kernels
    try:
        return min(timeit.repeat(lambda: solvers.sort_unsigned_fpt(g, keep_snapshots=False), number=1, repeat=repeat))
    finally:
        solvers.kernels = saved


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--tight-p", type=int, default=3)
    args = ap.parse_args(argv)

    pure = load("_kernels_py")
    compiled = load("_kernels")
    if compiled is None:
        print("compiled extension not built; only the pure kernels are available")
    pool = states(compiled or pure, args.n)
    print(f"n={args.n} states={len(pool)} repeat={args.repeat}")
    print(f"{'workload':<22}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")

    impls = [("pure", pure)] + ([("compiled", compiled)] if compiled else [])
    names = list(workloads(pure, args.n, pool))
    rows = {name: {} for name in names + [f"fpt tight p={args.tight_p}"]}
    for label, mod in impls:
        for name, fn in workloads(mod, args.n, pool).items():
            rows[name][label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        rows[f"fpt tight p={args.tight_p}"][label] = fpt_time(mod, args.tight_p, args.repeat)

    for name, t in rows.items():
        p = t["pure"]
        c = t.get("compiled")
        if c is None:
            print(f"{name:<22}{p:>12.4f}{'-':>14}{'-':>10}")
        else:
            print(f"{name:<22}{p:>12.4f}{c:>14.4f}{p / c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
