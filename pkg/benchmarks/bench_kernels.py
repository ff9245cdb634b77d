"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from monoidcats.kernels import available_backends


def workloads(rng):
    n, k = 2000, 4
    u = [rng.randrange(k) for _ in range(n)]
    v = u[:]
    rng.shuffle(v)
    p = list(range(n))
    q = list(range(n))
    rng.shuffle(p)
    rng.shuffle(q)
    cod = [rng.randrange(k) for _ in range(n)]
    where = [[i for i, e in enumerate(cod) if e == x] for x in range(k)]
    phi = [rng.choice(where[x]) for x in u]
    small_dom, small_cod = [0, 0, 1, 1, 0], [1, 0, 1, 0, 0, 1]
    return {
        "occ_ranks": lambda m: m.occ_ranks(u, k),
        "canonical_perm": lambda m: m.canonical_perm(u, v, k),
        "compose": lambda m: m.compose(p, q),
        "invert": lambda m: m.invert(p),
        "transport": lambda m: m.transport(phi, p, list(range(n))),
        "first_violation": lambda m: m.first_violation(u, cod, phi),
        "fiber_maps": lambda m: m.fiber_maps(u, cod, phi, k),
        "hom_maps": lambda m: sum(1 for _ in m.hom_maps(small_dom, small_cod, 2)),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=20)
    args = parser.parse_args()
    backends = available_backends()
    names = sorted(backends)
    print(f"{'kernel':<22}" + "".join(f"{n + ' (ms)':>14}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(random.Random(0)).items():
        times = {}
        for name in names:
            m = backends[name]
            best = min(timeit.repeat(lambda: fn(m), repeat=args.repeat, number=args.number))
            times[name] = 1000 * best / args.number
        row = f"{label:<22}" + "".join(f"{times[n]:>14.4f}" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>11.1f}x"
        print(row)
    if "cython" not in backends:
        print("compiled kernels not built; only the pure-Python backend was timed")


if __name__ == "__main__":
    main()
