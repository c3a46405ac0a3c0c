"""Compare the Cython and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Every backend must produce identical results; timings are best-of-N.
"""
from __future__ import annotations

import argparse
import random
import timeit

from arcmodel.kernels import arc_index_table, available_backends


def random_pairs(rng: random.Random, k: int, m: int) -> list[tuple[int, int]]:
    return [tuple(sorted(rng.sample(range(k), 2))) for _ in range(m)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = available_backends()
    rng = random.Random(0)
    batch = [(k, random_pairs(rng, k, rng.randint(1, 8))) for k in (8, 12, 16, 24) for _ in range(200)]

    cases = {
        "saturate x800": lambda m: [m.saturate_indices(k, p) for k, p in batch],
        "is_saturated x800": lambda m: [m.is_saturated_indices(k, p) for k, p in batch],
        "saturated_masks k=5": lambda m: m.saturated_masks(5),
        "saturated_masks k=6": lambda m: m.saturated_masks(6),
    }
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':24s}" + "".join(f"{name:>12s}" for name in backends) + "     speedup")
    for label, fn in cases.items():
        results = {name: fn(mod) for name, mod in backends.items()}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"{label}: backends disagree")
        times = {
            name: min(timeit.repeat(lambda m=mod: fn(m), number=1, repeat=args.repeat))
            for name, mod in backends.items()
        }
        row = f"{label:24s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times.values())
        if "cython" in times:
            row += f"  {times['python'] / times['cython']:8.1f}x"
        print(row)
    print(f"arc table for k=6: {len(arc_index_table(6))} arcs")


if __name__ == "__main__":
    main()
