"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_backends.py [--repeat 3] [--scale 1.0]

Each kernel runs through the public solvers so the timings include the
array marshalling a real call pays. Results must agree across backends.
"""

import argparse
import time

from hyperdense import backend, brute_force, solve_exact, solve_greedy
from hyperdense.oracle import random_instance, sized_instance


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(scale):
    n_flow = int(300 * scale)
    flow_H = random_instance(1, n_flow, 3 * n_flow, 6, "convex", 9)
    peel_H = sized_instance(2, int(20_000 * scale), int(200_000 * scale), 8)
    brute_H = random_instance(3, 17, 30, 5, "convex", 9)
    # warm the cached integer arrays so both backends time only the kernel path
    for H in (flow_H, peel_H, brute_H):
        H.arrays
    return [
        (f"exact flow  n={flow_H.n} p={flow_H.p}", lambda: solve_exact(flow_H)[0]),
        (f"greedy peel n={peel_H.n} p={peel_H.p}", lambda: solve_greedy(peel_H)[0]),
        (f"brute force n={brute_H.n} m={brute_H.m}",
         lambda: (brute_force(brute_H).best_set, brute_force(brute_H).best_density)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", type=float, default=1.0)
    args = ap.parse_args()
    names = backend.available()
    if "cython" not in names:
        print("compiled kernels are not built; only the Python backend is available")
    print(f"{'case':38s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, fn in cases(args.scale):
        times, outs = [], []
        for name in names:
            with backend.use(name):
                t, out = timed(fn, args.repeat)
            times.append(t)
            outs.append(out)
        assert all(o == outs[0] for o in outs), f"backends disagree on {label}"
        speed = f"{times[0] / times[-1]:10.1f}x" if len(times) > 1 else ""
        print(f"{label:38s}" + "".join(f"{t:11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
