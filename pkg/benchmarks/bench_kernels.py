"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit
from itertools import product

import numpy as np

from cocart import kernels


def transformation_monoid(n):
    """Composition table of all maps {0..n-1} -> itself, as a one-object category."""
    maps = list(product(range(n), repeat=n))
    index = {f: i for i, f in enumerate(maps)}
    table = np.empty((len(maps), len(maps)), dtype=np.intc)
    for i, g in enumerate(maps):
        for j, f in enumerate(maps):
            table[i, j] = index[tuple(g[f[x]] for x in range(n))]
    return table


def cases():
    t3 = transformation_monoid(3)
    return [
        ("count_associative_operations(3)", lambda b: b.count_associative_operations(3)),
        ("associativity_violations(T3, 27x27)", lambda b: b.associativity_violations(t3)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    backends = [("python", kernels.python_backend)]
    if kernels.compiled_backend is not None:
        backends.append(("cython", kernels.compiled_backend))
    else:
        print("compiled backend not built; timing the fallback only")
    for label, fn in cases():
        results = {}
        for name, backend in backends:
            best = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
            results[name] = best
        line = "  ".join(f"{name} {t * 1e3:9.2f} ms" for name, t in results.items())
        if len(results) == 2:
            line += f"  speedup {results['python'] / results['cython']:.1f}x"
        print(f"{label:<40} {line}")


if __name__ == "__main__":
    main()
