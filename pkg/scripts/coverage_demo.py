#!/usr/bin/env python3
"""Render a coverage map as ASCII shades and cross-check it with the oracle.

Example:
    python scripts/coverage_demo.py --gap 0.2 --radius 3.6 --cx 5.05 --cy 5.05
"""

import argparse
import math

from pixgrid import (Circle, GridSpec, OracleConfig, compute_coverage,
                     total_covered_area, verify_map)

SHADES = " .:-=+*#%@"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=float, default=1.0)
    ap.add_argument("--gap", type=float, default=0.2)
    ap.add_argument("--rows", type=int, default=10)
    ap.add_argument("--cols", type=int, default=10)
    ap.add_argument("--cx", type=float, default=5.05)
    ap.add_argument("--cy", type=float, default=5.05)
    ap.add_argument("--radius", type=float, default=3.6)
    ap.add_argument("--skip-oracle", action="store_true")
    args = ap.parse_args()

    grid = GridSpec(args.size, args.gap, args.rows, args.cols)
    circle = Circle(args.cx, args.cy, args.radius)
    cov = compute_coverage(grid, circle)

    frac = {(e.index.row, e.index.col): e.fraction for e in cov.entries}
    for r in range(grid.rows):
        print("".join(SHADES[min(9, int(frac.get((r, c), 0.0) * 10))]
                      for c in range(grid.cols)))

    total = total_covered_area(cov)
    disc = math.pi * circle.radius ** 2
    print(f"\n{len(cov.entries)} intersected pixels, "
          f"covered area {total:.12f} ({total / disc:.4%} of the disc; "
          f"fill factor {grid.fill_factor:.4f})")

    if not args.skip_oracle:
        s2 = grid.size ** 2
        report = verify_map(cov, OracleConfig(abs_tol=1e-10 * s2),
                            tol=1e-8 * s2, outside_tol=1e-10 * s2)
        print(f"oracle check: {'PASS' if report.passed else 'FAIL'} "
              f"(max deviation {report.max_deviation:.3e} over "
              f"{report.entries_checked} entries)")


if __name__ == "__main__":
    main()
