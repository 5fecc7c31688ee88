"""Benchmark the canonicalization backends on breadth-first workloads.

Runs the key lemma sweep and a batch of raw canonical codes twice, once
per backend, by toggling the ``BASILICA_PURE`` environment variable in
subprocesses.  Usage::

    python benchmarks/bench_kernels.py [--n 2] [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, random, sys, time
import basilica
from basilica.graphs import canonical_form
from basilica.certificates import key_lemma_report
from basilica.sampling import random_graph_walk, seed_graphs

n = int(sys.argv[1])

rng = random.Random(0)
pool = []
for _, seed in seed_graphs():
    g = seed
    pool.append(g)
    for _ in range(40):
        g = random_graph_walk(g, rng, steps=1)[-1][1]
        pool.append(g)

t0 = time.perf_counter()
for g in pool:
    canonical_form(g)
raw = time.perf_counter() - t0

t0 = time.perf_counter()
report = key_lemma_report(n, slack=2)
sweep = time.perf_counter() - t0

print(json.dumps({
    "backend": basilica.BACKEND,
    "raw_codes": len(pool),
    "raw_seconds": raw,
    "sweep_classes": report["classes_visited"],
    "sweep_seconds": sweep,
}))
"""


def run_once(pure: bool, n: int) -> dict:
    env = dict(os.environ)
    if pure:
        env["BASILICA_PURE"] = "1"
    else:
        env.pop("BASILICA_PURE", None)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(n)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2, help="key lemma family index")
    parser.add_argument("--repeat", type=int, default=3, help="runs per backend")
    args = parser.parse_args()
    results = {}
    for pure in (True, False):
        best = None
        for _ in range(args.repeat):
            run = run_once(pure, args.n)
            if best is None or run["raw_seconds"] < best["raw_seconds"]:
                best = run
        results[best["backend"]] = best
        print(
            f"{best['backend']:>8}: {best['raw_codes']} codes in "
            f"{best['raw_seconds']:.3f}s, sweep of {best['sweep_classes']} "
            f"classes in {best['sweep_seconds']:.3f}s"
        )
    if set(results) == {"pure", "compiled"}:
        raw = results["pure"]["raw_seconds"] / results["compiled"]["raw_seconds"]
        sweep = results["pure"]["sweep_seconds"] / results["compiled"]["sweep_seconds"]
        print(f"speedup: {raw:.2f}x on raw codes, {sweep:.2f}x on the sweep")
    else:
        print("compiled backend unavailable, measured the pure backend only")
    return 0


if __name__ == "__main__":
    sys.exit(main())
