"""Compare the compiled image kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--sizes 64 128 256] [--repeat 5] [--json out.json]

Each row reports the best-of-``repeat`` wall time per call for both backends
on a rendered synthetic phantom, plus the speed-up.
"""

import argparse
import json
import timeit

import numpy as np

from harmonix import imageops
from harmonix.datasets import DomainSpec, generate_phantom, render_domain


def phantom(size: int) -> np.ndarray:
    sample = generate_phantom(0, size)
    return render_domain(sample, DomainSpec(1), seed=0)


def cases(img: np.ndarray):
    ref = img > 0.05
    v = imageops.frangi(img)
    return {
        "canny": lambda: imageops.canny(img),
        "frangi": lambda: imageops.frangi(img),
        "label_components": lambda: imageops.label_components(v > 0.15),
        "segment": lambda: imageops.segment(img, 0.15, ref),
    }


def best_time(fn, repeat: int) -> float:
    number = 1
    # grow the inner loop until one measurement takes at least 20 ms
    while timeit.timeit(fn, number=number) < 0.02 and number < 1000:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def run(sizes, repeat: int) -> list[dict]:
    rows = []
    for size in sizes:
        img = phantom(size)
        timings = {}
        for backend in ("compiled", "python"):
            imageops.use_backend(backend)
            for name, fn in cases(img).items():
                timings.setdefault(name, {})[backend] = best_time(fn, repeat)
        imageops.use_backend("compiled")
        for name, t in timings.items():
            rows.append({"kernel": name, "size": size, **t, "speedup": t["python"] / t["compiled"]})
    return rows


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--json", help="also write the rows to this file")
    args = p.parse_args(argv)
    try:
        imageops.use_backend("compiled")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install --no-build-isolation -e .` first")
    rows = run(args.sizes, args.repeat)
    print(f"{'kernel':<18}{'size':>6}{'compiled ms':>14}{'python ms':>12}{'speed-up':>10}")
    for r in rows:
        print(f"{r['kernel']:<18}{r['size']:>6}{1e3 * r['compiled']:>14.3f}{1e3 * r['python']:>12.3f}{r['speedup']:>9.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
