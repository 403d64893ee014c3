#!/usr/bin/env python3
"""Benchmark the census kernels: JIT-compiled vs interpreted.

The backend is fixed when ybe_garside._kernels is imported, so each
measurement runs in a child interpreter with YBE_GARSIDE_BACKEND set.  The
child warms the kernel on a trivial size first, so JIT compilation time is
not billed to the measured sizes.

    python3 benchmarks/bench_census.py            # sizes 3 and 4
    python3 benchmarks/bench_census.py --sizes 3 4 5
"""

import argparse
import json
import os
import subprocess
import sys

CHILD = """
import json, sys, time
n = int(sys.argv[1])
from ybe_garside.census import search_labeled, _group_classes
from ybe_garside._kernels import BACKEND
search_labeled(2)  # warm-up: triggers JIT compilation when enabled
t0 = time.perf_counter()
labeled = search_labeled(n)
t1 = time.perf_counter()
classes = _group_classes(n, labeled)
t2 = time.perf_counter()
print(json.dumps({
    "backend": BACKEND, "n": n, "labeled": len(labeled),
    "classes": len(classes), "search_s": t1 - t0, "group_s": t2 - t1,
}))
"""


def run_child(backend: str, n: int) -> dict:
    env = dict(os.environ, YBE_GARSIDE_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", CHILD, str(n)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 4])
    parser.add_argument(
        "--backends", nargs="+", default=["numba", "python"], choices=["numba", "python"]
    )
    args = parser.parse_args()

    print(f"{'n':>3} {'backend':>8} {'labeled':>8} {'classes':>8} {'search[s]':>10} {'group[s]':>9}")
    totals: dict[tuple[int, str], float] = {}
    for n in args.sizes:
        for backend in args.backends:
            r = run_child(backend, n)
            totals[(n, backend)] = r["search_s"] + r["group_s"]
            print(
                f"{r['n']:>3} {r['backend']:>8} {r['labeled']:>8} {r['classes']:>8} "
                f"{r['search_s']:>10.3f} {r['group_s']:>9.3f}"
            )
    if set(args.backends) >= {"numba", "python"}:
        for n in args.sizes:
            fast, slow = totals[(n, "numba")], totals[(n, "python")]
            if fast > 0:
                print(f"n={n}: numba speedup {slow / fast:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
