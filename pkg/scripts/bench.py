"""Throughput measurements for the hot paths behind the acceptance targets.

Run from the repository root:  python scripts/bench.py
"""

import time

import numpy as np

import qschmidt as q

COMBOS = [
    ("pp", None, None), ("pe", None, "diagonal"), ("pe", None, "nondiagonal"),
    ("ep", None, None), ("ee", None, "diagonal"), ("ee", None, "nondiagonal"),
    ("ppp", None, None), ("ppe", 1, None), ("ppe", 2, None), ("ppe", 3, None),
    ("pppp", None, None), ("ppee", 1, None), ("ppee", 2, None),
    ("ppee", 3, None), ("pm", None, None), ("pmee", None, None),
    ("mmee", None, "diagonal"), ("mmee", None, "nondiagonal"),
]


def bench_dual_route(count=10_000):
    rng = q.SplitMix64(1)
    states = [q.random_state(rng) for _ in range(count)]
    start = time.perf_counter()
    worst = 0.0
    for s in states:
        d = q.schmidt(s)
        o = q.oracle_schmidt(s)
        worst = max(worst, float(np.max(np.abs(d.coeffs - o.coeffs))))
    elapsed = time.perf_counter() - start
    print(f"dual-route decomposition: {count} states in {elapsed:.2f} s "
          f"({1e6 * elapsed / count:.0f} us/state), worst mismatch {worst:.2e}")


def bench_construct_verify(count=1_000):
    total = 0.0
    for set_type, case_id, variant in COMBOS:
        spec = q.SampleSpec(set_type=set_type, case_id=case_id,
                            variant=variant, seed=2, count=count)
        start = time.perf_counter()
        for obj in q.sample(spec):
            states = obj.states if hasattr(obj, "states") \
                else [obj.first, obj.second]
            if not q.verify_set(states).passed:
                raise RuntimeError(f"verification failed for {set_type}")
        elapsed = time.perf_counter() - start
        total += elapsed
        label = f"{set_type}/{case_id or variant or '-'}"
        print(f"construct+verify {label:18s} {count} sets in {elapsed:.2f} s")
    print(f"total: {total:.2f} s for {count * len(COMBOS)} sets")


if __name__ == "__main__":
    bench_dual_route()
    bench_construct_verify()
