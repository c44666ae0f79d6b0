"""Time the numba kernels against their pure-numpy counterparts.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each kernel is called once before timing so JIT compilation is excluded.
Both implementations are checked to agree on the benchmark inputs.
"""
import argparse
import json
import timeit

import numpy as np

from distocc import kernels
from distocc.scene import generate_scene


def random_boxes(rng, n):
    pts = rng.uniform(0, 1, size=(n, 2, 2))
    return np.concatenate([pts.min(axis=1), pts.max(axis=1)], axis=1)


def cases(rng):
    a, b = random_boxes(rng, 100), random_boxes(rng, 100)
    scene = generate_scene(0)
    rects, depths, owner = scene._flat_parts()
    obj_depth = scene.object_depth
    cost = rng.uniform(size=(6, 100))
    n = 100
    base = random_boxes(rng, 6)
    pick = rng.integers(0, 6, size=n)
    ba = np.clip(base[pick] + rng.normal(0, 0.01, (n, 4)), 0, 1)
    bb = np.clip(base[(pick + 1) % 6] + rng.normal(0, 0.01, (n, 4)), 0, 1)
    keys = rng.integers(0, 2, size=(n, 4)).astype(np.int64)
    order = np.arange(n, dtype=np.int64)
    return {
        "pairwise_iou (100x100)": ("pairwise_iou", (a, b)),
        "pairwise_giou (100x100)": ("pairwise_giou", (a, b)),
        "git_boxes (100)": ("git_boxes", (a, b)),
        "rasterize_depth (128x128 scene)": ("rasterize_depth", (rects, depths, owner, scene.n_objects, 128, 128)),
        "coverage_matrix (128x128 scene)": ("coverage_matrix", (obj_depth,)),
        "hungarian (6x100)": ("hungarian", (cost,)),
        "greedy_nms (100 preds)": ("greedy_nms", (order, ba, bb, keys, 0.7)),
    }


def same(x, y):
    if isinstance(x, tuple):
        return all(same(u, v) for u, v in zip(x, y))
    return np.allclose(x, y, atol=1e-12)


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json", help="write results to this file")
    args = p.parse_args()

    rng = np.random.default_rng(0)
    rows = []
    print(f"{'kernel':<34}{'numba us':>12}{'numpy us':>12}{'speedup':>10}")
    for label, (name, inputs) in cases(rng).items():
        fast, ref = kernels.implementations(name)
        if not same(fast(*inputs), ref(*inputs)):
            raise SystemExit(f"{name}: backends disagree")
        times = []
        for fn in (fast, ref):
            number, _ = timeit.Timer(lambda: fn(*inputs)).autorange()
            best = min(timeit.repeat(lambda: fn(*inputs), number=number, repeat=args.repeat)) / number
            times.append(best * 1e6)
        rows.append({"kernel": label, "numba_us": times[0], "numpy_us": times[1],
                     "speedup": times[1] / times[0]})
        print(f"{label:<34}{times[0]:>12.1f}{times[1]:>12.1f}{times[1] / times[0]:>9.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
