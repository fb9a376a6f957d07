"""Time the compiled face kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each case runs the full link sweep behind ``is_semi_eulerian`` (one link
Euler characteristic per face) plus the f-vector count, on both backends.
"""
from __future__ import annotations

import argparse
import time

from eulerfaces import _kernels_py
from eulerfaces.generators import cross_polytope_boundary, join, simplex_boundary, torus_7

try:
    from eulerfaces import _speedups
except ImportError:
    _speedups = None

CASES = {
    "simplex-boundary d=10": lambda: simplex_boundary(10),
    "simplex-boundary d=13": lambda: simplex_boundary(13),
    "cross-polytope d=7": lambda: cross_polytope_boundary(7),
    "cross-polytope d=8": lambda: cross_polytope_boundary(8),
    "torus * S2 (d=5)": lambda: join(torus_7(), cross_polytope_boundary(2)),
}


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(backend, facets, repeat):
    faces = backend.face_masks(facets)
    t_count, counts = best_of(lambda: backend.size_counts(facets), repeat)
    t_links, chis = best_of(lambda: backend.link_eulers(facets, faces), repeat)
    return t_count, t_links, list(counts), list(chis)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _speedups is None:
        print("compiled backend not built; nothing to compare")
        return
    print(f"{'case':<24}{'faces':>8}{'py count':>11}{'cy count':>11}{'py links':>11}{'cy links':>11}{'speedup':>9}")
    for name, make in CASES.items():
        C = make()
        facets = list(C.facet_masks)
        py = bench(_kernels_py, facets, args.repeat)
        cy = bench(_speedups, facets, args.repeat)
        if py[2:] != cy[2:]:
            raise SystemExit(f"backends disagree on {name}")
        speedup = (py[0] + py[1]) / max(cy[0] + cy[1], 1e-9)
        print(
            f"{name:<24}{sum(py[2]):>8}{py[0]:>10.4f}s{cy[0]:>10.4f}s{py[1]:>10.4f}s{cy[1]:>10.4f}s{speedup:>8.1f}x"
        )


if __name__ == "__main__":
    main()
