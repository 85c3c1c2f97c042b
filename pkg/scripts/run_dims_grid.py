#!/usr/bin/env python3
"""Sweep the dimension cross check over a grid of levels and primes.

For every (m, n, p) cell the script compares, degree by degree, the
kernel dimension of the defining derivative condition with the rank of
the generator span, and writes one CSV block per cell.

Example:
    python scripts/run_dims_grid.py --primes 3 5 --max-mn 2 --dmax 12 -o dims.csv
"""

import argparse
import sys
import time
from dataclasses import dataclass

from supersympoly import dim_grid, dim_reports_to_csv


@dataclass(frozen=True)
class SweepConfig:
    primes: tuple = (3, 5)
    cells: tuple = ((1, 1), (2, 1), (1, 2), (2, 2))
    dmax: int = 12


def run_sweep(config: SweepConfig, out) -> bool:
    all_match = True
    header_written = False
    for p in config.primes:
        for m, n in config.cells:
            t0 = time.time()
            reports = dim_grid(m, n, p, config.dmax)
            csv = dim_reports_to_csv(reports)
            lines = csv.splitlines()
            if not header_written:
                print(lines[0], file=out)
                header_written = True
            for line in lines[1:]:
                print(line, file=out)
            bad = [r for r in reports if not r.match]
            all_match &= not bad
            status = "ok" if not bad else f"{len(bad)} MISMATCHES"
            print(
                f"# m={m} n={n} p={p}: {status} ({time.time() - t0:.1f}s)",
                file=sys.stderr,
            )
    return all_match


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[3, 5])
    parser.add_argument("--max-mn", type=int, default=2, help="sweep all 1 <= m, n <= this")
    parser.add_argument("--dmax", type=int, default=12)
    parser.add_argument("-o", "--output", help="CSV path (default: stdout)")
    args = parser.parse_args()

    cells = tuple(
        (m, n) for m in range(1, args.max_mn + 1) for n in range(1, args.max_mn + 1)
    )
    config = SweepConfig(primes=tuple(args.primes), cells=cells, dmax=args.dmax)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            ok = run_sweep(config, fh)
    else:
        ok = run_sweep(config, sys.stdout)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
